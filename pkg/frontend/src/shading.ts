/** Similarity-to-shade mapping for the notebook overview.
 *
 * Shades are the slide's similarities normalized by their maximum, so the
 * best-matching cell always gets shade 1 and shading is monotone: a higher
 * similarity never renders lighter.
 */

import type { LinkEntry } from "./types.js";

export type HighlightMap = Map<number, number>;

export function computeHighlight(links: LinkEntry[]): HighlightMap {
  const shades: HighlightMap = new Map();
  if (links.length === 0) return shades;
  let max = 0;
  const parsed = links.map((entry) => {
    const value = Number.parseFloat(entry.similarity);
    if (value > max) max = value;
    return { cell: entry.cell_index, value };
  });
  for (const { cell, value } of parsed) {
    const shade = max > 0 ? value / max : 0;
    const current = shades.get(cell) ?? 0;
    if (shade > current) shades.set(cell, shade);
  }
  return shades;
}

/** CSS background for a shade in [0, 1]; deeper shade = darker fill. */
export function shadeColor(shade: number): string {
  const clamped = Math.max(0, Math.min(1, shade));
  const alpha = 0.15 + 0.85 * clamped;
  return `rgba(214, 124, 28, ${alpha.toFixed(3)})`;
}
