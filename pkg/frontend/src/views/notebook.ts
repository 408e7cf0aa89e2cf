/** Notebook overview (minimap) and full notebook rendering.
 *
 * Minimap rows are kind-coded and shaded by the selected slide's
 * similarity; clicking a highlighted row scrolls the notebook panel to
 * the matching cell.
 */

import type { HighlightMap } from "../shading.js";
import { shadeColor } from "../shading.js";
import type { OverviewCell } from "../types.js";

export interface NotebookCallbacks {
  onJump(cellIndex: number): void;
}

export function renderMinimap(
  container: HTMLElement,
  cells: OverviewCell[],
  highlight: HighlightMap,
  callbacks: NotebookCallbacks,
): void {
  container.replaceChildren();
  for (const cell of cells) {
    const row = document.createElement("div");
    row.className = `minimap-cell minimap-${cell.kind}`;
    row.dataset.cellIndex = String(cell.index);
    const shade = highlight.get(cell.index);
    if (shade !== undefined) {
      row.classList.add("highlighted");
      row.dataset.shade = shade.toFixed(3);
      row.style.backgroundColor = shadeColor(shade);
    }
    row.title = `cell ${cell.index} (${cell.kind})`;
    row.addEventListener("click", () => callbacks.onJump(cell.index));
    container.appendChild(row);
  }
}

export function renderNotebook(
  container: HTMLElement,
  cells: OverviewCell[],
  highlight: HighlightMap,
): void {
  container.replaceChildren();
  for (const cell of cells) {
    const box = document.createElement("div");
    box.className = `nb-cell nb-${cell.kind}`;
    box.id = `nb-cell-${cell.index}`;
    box.dataset.cellIndex = String(cell.index);
    const shade = highlight.get(cell.index);
    if (shade !== undefined) {
      box.classList.add("highlighted");
      box.style.outline = `3px solid ${shadeColor(shade)}`;
    }
    const head = document.createElement("div");
    head.className = "nb-cell-head";
    head.textContent = `[${cell.index}] ${cell.kind}`;
    box.appendChild(head);
    const pre = document.createElement("pre");
    pre.textContent = cell.source;
    box.appendChild(pre);
    if (cell.outputs.length > 0) {
      const marks = document.createElement("div");
      marks.className = "nb-outputs";
      marks.textContent = cell.outputs.map((o) => o.kind).join(" · ");
      box.appendChild(marks);
    }
    container.appendChild(box);
  }
}

export function scrollToCell(root: ParentNode, cellIndex: number): void {
  const target = root.querySelector(`#nb-cell-${cellIndex}`);
  if (target && "scrollIntoView" in target) {
    (target as HTMLElement).scrollIntoView({ behavior: "smooth", block: "center" });
  }
}
