/** Slides outline overview: every slide in order, with an example-prompt
 * indicator and a "no content located" marker for empty auto slides. */

import type { Slide } from "../types.js";

export interface OutlineCallbacks {
  onSelect(slideId: string): void;
}

export function renderOutline(
  container: HTMLElement,
  slides: Slide[],
  selected: string | null,
  callbacks: OutlineCallbacks,
): void {
  container.replaceChildren();
  const list = document.createElement("ol");
  list.className = "outline-list";
  for (const slide of slides) {
    const item = document.createElement("li");
    item.className = "outline-entry";
    item.dataset.slideId = slide.id;
    item.dataset.origin = slide.origin;
    if (slide.id === selected) item.classList.add("selected");

    const label = document.createElement("span");
    label.className = "outline-title";
    label.textContent = slide.title || "(untitled)";
    item.appendChild(label);

    if (slide.origin === "prompt") {
      const badge = document.createElement("span");
      badge.className = "badge badge-prompt";
      badge.title = "Filled with an example-based prompt; replace with your own story";
      badge.textContent = "example";
      item.appendChild(badge);
    }
    if (slide.empty_auto) {
      const badge = document.createElement("span");
      badge.className = "badge badge-empty";
      badge.textContent = "no content located";
      item.appendChild(badge);
    }
    item.addEventListener("click", () => callbacks.onSelect(slide.id));
    list.appendChild(item);
  }
  container.appendChild(list);
}
