/** Application controller: wires the config form, outline, slide panel
 * and notebook overview to the deck service. All state transitions come
 * from API responses; edits are optimistic-concurrency PATCHes and a
 * stale revision surfaces as a conflict banner with a reload action.
 */

import { ApiError, DeckApi } from "./api.js";
import {
  initialState,
  slideById,
  withDeck,
  withSelection,
  type ViewState,
} from "./state.js";
import type { DeckConfigIn } from "./types.js";
import { renderMinimap, renderNotebook, scrollToCell } from "./views/notebook.js";
import { renderOutline } from "./views/outline.js";
import { renderSlidePanel } from "./views/slides.js";

export interface AppElements {
  outline: HTMLElement;
  slidePanel: HTMLElement;
  minimap: HTMLElement;
  notebook: HTMLElement;
  status: HTMLElement;
  conflict: HTMLElement;
  downloads: HTMLElement;
}

export class App {
  state: ViewState = initialState();

  constructor(
    private api: DeckApi,
    private el: AppElements,
  ) {}

  toast(message: string): void {
    const note = document.createElement("div");
    note.className = "toast";
    note.textContent = message;
    this.el.status.appendChild(note);
    setTimeout(() => note.remove(), 4000);
  }

  private showConflict(): void {
    this.el.conflict.replaceChildren();
    const banner = document.createElement("div");
    banner.className = "conflict-banner";
    const text = document.createElement("span");
    text.textContent =
      "The deck changed under you (stale revision). Reload to continue editing.";
    banner.appendChild(text);
    const reload = document.createElement("button");
    reload.className = "reload-deck";
    reload.textContent = "Reload deck";
    reload.addEventListener("click", () => {
      void this.reload();
    });
    banner.appendChild(reload);
    this.el.conflict.appendChild(banner);
  }

  private clearConflict(): void {
    this.el.conflict.replaceChildren();
  }

  async createFromText(notebook: string, config: DeckConfigIn): Promise<void> {
    const envelope = await this.api.createDeck(notebook, config);
    const overview = await this.api.notebookOverview(envelope.deck_id);
    this.state = withDeck(initialState(), envelope, overview);
    this.render();
  }

  async reload(): Promise<void> {
    if (!this.state.deckId) return;
    const envelope = await this.api.getDeck(this.state.deckId);
    this.state = withDeck(this.state, envelope);
    this.clearConflict();
    if (this.state.selectedSlide) {
      await this.selectSlide(this.state.selectedSlide);
    } else {
      this.render();
    }
  }

  async selectSlide(slideId: string): Promise<void> {
    if (!this.state.deckId) return;
    const slide = slideById(this.state, slideId);
    if (!slide) return;
    try {
      const links =
        slide.origin === "auto"
          ? (await this.api.links(this.state.deckId, slideId)).links
          : [];
      this.state = withSelection(this.state, slideId, links);
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        this.toast(`Slide links not found: ${error.detail}`);
        this.state = withSelection(this.state, slideId, []);
      } else {
        throw error;
      }
    }
    this.render();
  }

  private async mutate(action: () => Promise<unknown>): Promise<void> {
    if (!this.state.deckId) return;
    try {
      await action();
      const envelope = await this.api.getDeck(this.state.deckId);
      this.state = withDeck(this.state, envelope);
      this.clearConflict();
      if (this.state.selectedSlide) {
        await this.selectSlide(this.state.selectedSlide);
        return;
      }
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        this.showConflict();
        return;
      }
      if (error instanceof ApiError) {
        this.toast(`Request failed: ${error.detail}`);
        return;
      }
      throw error;
    }
    this.render();
  }

  async saveEdit(slideId: string, title: string, bullets: string[]): Promise<void> {
    await this.mutate(() =>
      this.api.patchSlide(this.state.deckId!, slideId, this.state.revision, {
        title,
        bullets,
      }),
    );
  }

  async addSlideAfter(anchorId: string, title: string): Promise<void> {
    await this.mutate(() =>
      this.api.addSlide(this.state.deckId!, this.state.revision, anchorId, title),
    );
  }

  async deleteSlide(slideId: string): Promise<void> {
    await this.mutate(() =>
      this.api.deleteSlide(this.state.deckId!, slideId, this.state.revision),
    );
  }

  jumpToCell(cellIndex: number): void {
    scrollToCell(this.el.notebook.ownerDocument, cellIndex);
  }

  render(): void {
    const slides = this.state.envelope?.deck.slides ?? [];
    renderOutline(this.el.outline, slides, this.state.selectedSlide, {
      onSelect: (id) => void this.selectSlide(id),
    });
    renderSlidePanel(
      this.el.slidePanel,
      this.state.selectedSlide
        ? slideById(this.state, this.state.selectedSlide)
        : undefined,
      {
        onSave: (id, title, bullets) => void this.saveEdit(id, title, bullets),
        onDelete: (id) => void this.deleteSlide(id),
        onAddAfter: (id, title) => void this.addSlideAfter(id, title),
      },
    );
    const cells = this.state.overview?.cells ?? [];
    renderMinimap(this.el.minimap, cells, this.state.highlight, {
      onJump: (index) => this.jumpToCell(index),
    });
    renderNotebook(this.el.notebook, cells, this.state.highlight);
    this.renderDownloads();
  }

  private renderDownloads(): void {
    this.el.downloads.replaceChildren();
    if (!this.state.deckId) return;
    for (const format of ["json", "md", "html"] as const) {
      const link = document.createElement("a");
      link.className = `download-${format}`;
      link.href = this.api.exportUrl(this.state.deckId, format);
      link.textContent = format;
      link.setAttribute("download", `deck.${format}`);
      this.el.downloads.appendChild(link);
    }
  }
}

/** Boot against the real DOM; used by the served index.html. */
export function boot(doc: Document, baseUrl = ""): App {
  const get = (id: string): HTMLElement => {
    const node = doc.getElementById(id);
    if (!node) throw new Error(`missing element #${id}`);
    return node;
  };
  const app = new App(new DeckApi(baseUrl), {
    outline: get("outline"),
    slidePanel: get("slide-panel"),
    minimap: get("minimap"),
    notebook: get("notebook"),
    status: get("status"),
    conflict: get("conflict"),
    downloads: get("downloads"),
  });

  const form = doc.getElementById("config-form") as HTMLFormElement | null;
  form?.addEventListener("submit", (event) => {
    event.preventDefault();
    const fileInput = get("nb-file") as HTMLInputElement;
    const file = fileInput.files?.[0];
    if (!file) {
      app.toast("Choose a notebook file first.");
      return;
    }
    const config: DeckConfigIn = {
      title: (get("cfg-title") as HTMLInputElement).value || file.name,
      presenter: (get("cfg-presenter") as HTMLInputElement).value,
      audience: (get("cfg-audience") as HTMLSelectElement).value as
        | "technical"
        | "nontechnical",
      detail: Number((get("cfg-detail") as HTMLSelectElement).value) as 1 | 2 | 3,
    };
    void file.text().then(
      (text) =>
        app.createFromText(text, config).catch((error: unknown) => {
          app.toast(
            error instanceof ApiError
              ? `Generation failed: ${error.detail}`
              : `Generation failed: ${String(error)}`,
          );
        }),
    );
  });
  return app;
}
