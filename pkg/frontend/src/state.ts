/** View state: one deck session, the selected slide, and the highlight
 * derived from its provenance links. State changes only as a result of
 * API responses; nothing is regenerated client-side.
 */

import { computeHighlight, type HighlightMap } from "./shading.js";
import type {
  DeckEnvelope,
  LinkEntry,
  NotebookOverview,
  Slide,
} from "./types.js";

export interface ViewState {
  deckId: string | null;
  revision: number;
  envelope: DeckEnvelope | null;
  overview: NotebookOverview | null;
  selectedSlide: string | null;
  highlight: HighlightMap;
}

export function initialState(): ViewState {
  return {
    deckId: null,
    revision: 0,
    envelope: null,
    overview: null,
    selectedSlide: null,
    highlight: new Map(),
  };
}

export function withDeck(
  state: ViewState,
  envelope: DeckEnvelope,
  overview?: NotebookOverview,
): ViewState {
  const slides = envelope.deck.slides;
  const stillThere = slides.some((s) => s.id === state.selectedSlide);
  return {
    ...state,
    deckId: envelope.deck_id,
    revision: envelope.revision,
    envelope,
    overview: overview ?? state.overview,
    selectedSlide: stillThere ? state.selectedSlide : null,
    highlight: stillThere ? state.highlight : new Map(),
  };
}

export function slideById(state: ViewState, slideId: string): Slide | undefined {
  return state.envelope?.deck.slides.find((s) => s.id === slideId);
}

/** Selecting a prompt/title/user slide clears the highlight; auto slides
 * highlight exactly the linked cells, shaded by normalized similarity. */
export function withSelection(
  state: ViewState,
  slideId: string,
  links: LinkEntry[],
): ViewState {
  const slide = slideById(state, slideId);
  const highlight =
    slide && slide.origin === "auto" ? computeHighlight(links) : new Map<number, number>();
  return { ...state, selectedSlide: slideId, highlight };
}
