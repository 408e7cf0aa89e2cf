/** End-to-end: the real UI components driven in jsdom against the real
 * Python service spawned as a child process. Covers the linking
 * acceptance path: selecting an auto slide highlights exactly the cells
 * the /links endpoint returns with monotone shading, selecting a prompt
 * slide highlights nothing, and an edit saved through the UI shows up in
 * a subsequent /export?format=json download.
 */

import { spawn, type ChildProcess } from "node:child_process";
import { readFileSync } from "node:fs";
import { dirname, resolve } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { boot, type App } from "../src/app.js";

const PORT = 8900 + Math.floor(Math.random() * 500);
const BASE = `http://127.0.0.1:${PORT}`;
const HERE = dirname(fileURLToPath(import.meta.url));
const REPO_ROOT = resolve(HERE, "..", "..");
const WINE = readFileSync(
  resolve(REPO_ROOT, "notebooks", "wine_quality.ipynb"),
  "utf-8",
);

let server: ChildProcess;

async function waitForServer(): Promise<void> {
  const deadline = Date.now() + 60_000;
  while (Date.now() < deadline) {
    try {
      const probe = await fetch(`${BASE}/api/decks/probe`);
      if (probe.status === 404) return; // server answers; deck just unknown
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 200));
  }
  throw new Error("service did not come up in time");
}

function mountShell(): void {
  document.body.innerHTML = `
    <div id="conflict"></div>
    <div id="outline"></div>
    <div id="slide-panel"></div>
    <div id="minimap"></div>
    <div id="notebook"></div>
    <div id="status"></div>
    <div id="downloads"></div>
  `;
}

async function flush(): Promise<void> {
  await new Promise((r) => setTimeout(r, 0));
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "nbdeck.cli", "serve", "--port", String(PORT), "--host", "127.0.0.1"],
    { cwd: REPO_ROOT, stdio: "ignore" },
  );
  await waitForServer();
});

afterAll(() => {
  server?.kill();
});

describe("UI against the live service", () => {
  let app: App;

  it("generates a deck and lists all slides in the outline", async () => {
    mountShell();
    app = boot(document, BASE);
    await app.createFromText(WINE, {
      title: "Red Wine Quality",
      presenter: "Data Team",
      audience: "technical",
      detail: 2,
    });
    const entries = document.querySelectorAll("#outline .outline-entry");
    expect(entries.length).toBe(18);
    const badges = document.querySelectorAll("#outline .badge-prompt");
    expect(badges.length).toBe(7);
    expect(document.querySelectorAll("#minimap .minimap-cell").length).toBe(24);
  });

  it("selecting an auto slide highlights exactly the linked cells, monotone", async () => {
    await app.selectSlide("exploratory_data_analysis");
    const response = await fetch(
      `${BASE}/api/decks/${app.state.deckId}/links?slide=exploratory_data_analysis`,
    );
    const { links } = (await response.json()) as {
      links: { cell_index: number; similarity: string }[];
    };
    expect(links.length).toBeGreaterThan(0);

    const highlighted = [...document.querySelectorAll("#minimap .highlighted")];
    const shownCells = highlighted
      .map((el) => Number((el as HTMLElement).dataset.cellIndex))
      .sort((a, b) => a - b);
    const linkedCells = links.map((l) => l.cell_index).sort((a, b) => a - b);
    expect(shownCells).toEqual(linkedCells);

    const shadeOf = new Map(
      highlighted.map((el) => [
        Number((el as HTMLElement).dataset.cellIndex),
        Number((el as HTMLElement).dataset.shade),
      ]),
    );
    const bySim = [...links].sort(
      (a, b) => Number(a.similarity) - Number(b.similarity),
    );
    for (let i = 1; i < bySim.length; i++) {
      expect(shadeOf.get(bySim[i].cell_index)!).toBeGreaterThanOrEqual(
        shadeOf.get(bySim[i - 1].cell_index)!,
      );
    }
  });

  it("selecting a prompt slide highlights nothing", async () => {
    await app.selectSlide("workflow");
    expect(document.querySelectorAll("#minimap .highlighted").length).toBe(0);
    expect(document.querySelectorAll("#notebook .highlighted").length).toBe(0);
  });

  it("an edit saved through the UI appears in a subsequent JSON export", async () => {
    await app.selectSlide("metrics");
    const textarea = document.querySelector(
      "#slide-panel .edit-bullets",
    ) as HTMLTextAreaElement;
    const title = document.querySelector(
      "#slide-panel .edit-title",
    ) as HTMLInputElement;
    expect(textarea).toBeTruthy();
    title.value = "Quality Metrics";
    textarea.value = "F1 score: balance of false positives and negatives";
    (document.querySelector("#slide-panel .save-slide") as HTMLButtonElement).click();
    await flush();
    await new Promise((r) => setTimeout(r, 300)); // let the PATCH round-trip
    expect(app.state.revision).toBe(1);

    const exported = await fetch(
      `${BASE}/api/decks/${app.state.deckId}/export?format=json`,
    );
    const deck = (await exported.json()) as {
      slides: { id: string; title: string; bullets: { text: string; origin: string }[] }[];
    };
    const metrics = deck.slides.find((s) => s.id === "metrics")!;
    expect(metrics.title).toBe("Quality Metrics");
    expect(metrics.bullets[0].text).toBe(
      "F1 score: balance of false positives and negatives",
    );
    expect(metrics.bullets[0].origin).toBe("user");
  });

  it("a stale save shows the conflict banner and reload recovers", async () => {
    // Out-of-band edit bumps the revision behind the UI's back.
    const sneaky = await fetch(
      `${BASE}/api/decks/${app.state.deckId}/slides/suggestions`,
      {
        method: "PATCH",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({
          expected_revision: app.state.revision,
          title: "Changed elsewhere",
        }),
      },
    );
    expect(sneaky.status).toBe(200);

    await app.saveEdit("metrics", "Will conflict", []);
    expect(document.querySelector("#conflict .conflict-banner")).toBeTruthy();

    (document.querySelector("#conflict .reload-deck") as HTMLButtonElement).click();
    await new Promise((r) => setTimeout(r, 300));
    expect(document.querySelector("#conflict .conflict-banner")).toBeNull();
    expect(app.state.revision).toBe(2);
  });

  it("deleting a prompt slide removes it from the outline", async () => {
    const before = document.querySelectorAll("#outline .outline-entry").length;
    await app.selectSlide("ethical_legal_considerations");
    (
      document.querySelector("#slide-panel .delete-slide") as HTMLButtonElement
    ).click();
    await new Promise((r) => setTimeout(r, 300));
    const after = document.querySelectorAll("#outline .outline-entry").length;
    expect(after).toBe(before - 1);
    expect(
      document.querySelector('[data-slide-id="ethical_legal_considerations"]'),
    ).toBeNull();
  });
});
