/** Slide detail panel: rendered bullets with inline markup, attachments,
 * and an edit mode (title line plus one bullet per line). */

import { renderInline } from "../inline.js";
import type { Slide } from "../types.js";

export interface SlideCallbacks {
  onSave(slideId: string, title: string, bullets: string[]): void;
  onDelete(slideId: string): void;
  onAddAfter(slideId: string, title: string): void;
}

function renderBullets(slide: Slide): HTMLElement {
  const list = document.createElement("ul");
  list.className = "slide-bullets";
  for (const bullet of slide.bullets) {
    const item = document.createElement("li");
    item.innerHTML = renderInline(bullet.text);
    item.dataset.origin = bullet.origin;
    if (bullet.short) item.dataset.short = "true";
    list.appendChild(item);
  }
  return list;
}

function renderAttachments(slide: Slide): HTMLElement {
  const box = document.createElement("div");
  box.className = "slide-attachments";
  for (const attachment of slide.attachments) {
    if (attachment.kind === "image") {
      const img = document.createElement("img");
      img.src = `data:${attachment.mime};base64,${attachment.data.replace(/\s+/g, "")}`;
      img.alt = `output of cell ${attachment.cell_index}`;
      box.appendChild(img);
    } else if (attachment.kind === "table") {
      const wrap = document.createElement("div");
      wrap.className = "attachment-table";
      wrap.innerHTML = attachment.data;
      box.appendChild(wrap);
    }
  }
  return box;
}

export function renderSlidePanel(
  container: HTMLElement,
  slide: Slide | undefined,
  callbacks: SlideCallbacks,
): void {
  container.replaceChildren();
  if (!slide) {
    const hint = document.createElement("p");
    hint.className = "panel-hint";
    hint.textContent = "Select a slide from the outline.";
    container.appendChild(hint);
    return;
  }

  const heading = document.createElement("h2");
  heading.className = "slide-title";
  heading.textContent = slide.title;
  container.appendChild(heading);

  if (slide.origin === "prompt") {
    const note = document.createElement("p");
    note.className = "prompt-note";
    note.textContent =
      "Example-based prompt: this content is a starting point for you to replace.";
    container.appendChild(note);
  }
  if (slide.empty_auto) {
    const note = document.createElement("p");
    note.className = "empty-note";
    note.textContent =
      "No notebook content located for this section; edit or delete the slide.";
    container.appendChild(note);
  }

  container.appendChild(renderBullets(slide));
  container.appendChild(renderAttachments(slide));

  const editor = document.createElement("div");
  editor.className = "slide-editor";

  const titleInput = document.createElement("input");
  titleInput.className = "edit-title";
  titleInput.value = slide.title;
  editor.appendChild(titleInput);

  const bulletsArea = document.createElement("textarea");
  bulletsArea.className = "edit-bullets";
  bulletsArea.rows = Math.max(3, slide.bullets.length + 1);
  bulletsArea.value = slide.bullets.map((b) => b.text).join("\n");
  editor.appendChild(bulletsArea);

  const save = document.createElement("button");
  save.className = "save-slide";
  save.textContent = "Save";
  save.addEventListener("click", () => {
    const bullets = bulletsArea.value
      .split("\n")
      .map((line) => line.trim())
      .filter((line) => line.length > 0);
    callbacks.onSave(slide.id, titleInput.value, bullets);
  });
  editor.appendChild(save);

  const addButton = document.createElement("button");
  addButton.className = "add-slide";
  addButton.textContent = "Add slide after";
  addButton.addEventListener("click", () => {
    const title = window.prompt("Title for the new slide", "New slide");
    if (title) callbacks.onAddAfter(slide.id, title);
  });
  editor.appendChild(addButton);

  if (slide.origin !== "title_page") {
    const del = document.createElement("button");
    del.className = "delete-slide";
    del.textContent = "Delete slide";
    del.addEventListener("click", () => callbacks.onDelete(slide.id));
    editor.appendChild(del);
  }

  container.appendChild(editor);
}
