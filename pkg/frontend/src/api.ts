/** Thin typed client over the deck service HTTP API. */

import type {
  DeckConfigIn,
  DeckEnvelope,
  LinksResponse,
  NotebookOverview,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`${status}: ${detail}`);
  }
}

async function decode<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class DeckApi {
  constructor(private baseUrl: string = "") {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  async createDeck(notebook: string, config: DeckConfigIn): Promise<DeckEnvelope> {
    const response = await fetch(this.url("/api/decks"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ notebook, config }),
    });
    return decode<DeckEnvelope>(response);
  }

  async getDeck(deckId: string): Promise<DeckEnvelope> {
    return decode<DeckEnvelope>(await fetch(this.url(`/api/decks/${deckId}`)));
  }

  async patchSlide(
    deckId: string,
    slideId: string,
    expectedRevision: number,
    patch: { title?: string; bullets?: string[] },
  ): Promise<DeckEnvelope> {
    const response = await fetch(
      this.url(`/api/decks/${deckId}/slides/${encodeURIComponent(slideId)}`),
      {
        method: "PATCH",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ expected_revision: expectedRevision, ...patch }),
      },
    );
    return decode<DeckEnvelope>(response);
  }

  async addSlide(
    deckId: string,
    expectedRevision: number,
    after: string,
    title: string,
  ): Promise<DeckEnvelope> {
    const response = await fetch(this.url(`/api/decks/${deckId}/slides`), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ expected_revision: expectedRevision, after, title }),
    });
    return decode<DeckEnvelope>(response);
  }

  async deleteSlide(
    deckId: string,
    slideId: string,
    expectedRevision: number,
  ): Promise<DeckEnvelope> {
    const response = await fetch(
      this.url(
        `/api/decks/${deckId}/slides/${encodeURIComponent(slideId)}` +
          `?expected_revision=${expectedRevision}`,
      ),
      { method: "DELETE" },
    );
    return decode<DeckEnvelope>(response);
  }

  async links(deckId: string, slideId: string): Promise<LinksResponse> {
    const response = await fetch(
      this.url(`/api/decks/${deckId}/links?slide=${encodeURIComponent(slideId)}`),
    );
    return decode<LinksResponse>(response);
  }

  async notebookOverview(deckId: string): Promise<NotebookOverview> {
    return decode<NotebookOverview>(
      await fetch(this.url(`/api/decks/${deckId}/notebook`)),
    );
  }

  exportUrl(deckId: string, format: "json" | "md" | "html"): string {
    return this.url(`/api/decks/${deckId}/export?format=${format}`);
  }

  async exportDeck(deckId: string, format: "json" | "md" | "html"): Promise<string> {
    const response = await fetch(this.exportUrl(deckId, format));
    if (!response.ok) throw new ApiError(response.status, response.statusText);
    return response.text();
  }
}
