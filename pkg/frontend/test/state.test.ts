import { describe, expect, it } from "vitest";

import { initialState, withDeck, withSelection } from "../src/state.js";
import type { DeckEnvelope, Slide } from "../src/types.js";

const slide = (id: string, origin: Slide["origin"]): Slide => ({
  id,
  section_id: id,
  title: id,
  origin,
  empty_auto: false,
  bullets: [],
  attachments: [],
});

const envelope = (): DeckEnvelope => ({
  deck_id: "session-1",
  revision: 3,
  deck: {
    deck_id: "deck-abc",
    revision: 3,
    slides: [slide("title", "title_page"), slide("eda", "auto"), slide("workflow", "prompt")],
    generator_metadata: {},
    config: {},
    tree: { root_id: 0, nodes: [] },
  },
});

describe("view state", () => {
  it("adopts the envelope's session id and revision", () => {
    const state = withDeck(initialState(), envelope());
    expect(state.deckId).toBe("session-1");
    expect(state.revision).toBe(3);
  });

  it("auto slide selection shades exactly the linked cells", () => {
    const state = withDeck(initialState(), envelope());
    const selected = withSelection(state, "eda", [
      { cell_index: 4, similarity: "0.800000" },
      { cell_index: 7, similarity: "0.600000" },
    ]);
    expect([...selected.highlight.keys()].sort()).toEqual([4, 7]);
    expect(selected.highlight.get(4)).toBeGreaterThan(selected.highlight.get(7)!);
  });

  it("prompt slide selection clears the highlight even when links are passed", () => {
    const state = withDeck(initialState(), envelope());
    const selected = withSelection(state, "workflow", [
      { cell_index: 4, similarity: "0.800000" },
    ]);
    expect(selected.highlight.size).toBe(0);
  });

  it("drops a selection that no longer exists after reload", () => {
    let state = withDeck(initialState(), envelope());
    state = withSelection(state, "eda", [{ cell_index: 1, similarity: "0.500000" }]);
    const smaller = envelope();
    smaller.deck.slides = smaller.deck.slides.filter((s) => s.id !== "eda");
    state = withDeck(state, smaller);
    expect(state.selectedSlide).toBeNull();
    expect(state.highlight.size).toBe(0);
  });
});
