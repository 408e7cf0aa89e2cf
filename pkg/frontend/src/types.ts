/** Wire types for the deck service (canonical JSON fragments). */

export interface ProvenanceEntry {
  cell_index: number;
  /** Six-decimal string form, e.g. "0.800000". */
  similarity: string;
}

export interface Bullet {
  text: string;
  origin: "generated" | "prompt" | "user";
  short: boolean;
  provenance: ProvenanceEntry[];
}

export interface Attachment {
  kind: "image" | "table" | "text";
  mime: string;
  data: string;
  cell_index: number;
}

export interface Slide {
  id: string;
  section_id: string;
  title: string;
  origin: "title_page" | "auto" | "prompt" | "user";
  empty_auto: boolean;
  bullets: Bullet[];
  attachments: Attachment[];
}

export interface CanonicalDeck {
  deck_id: string;
  revision: number;
  slides: Slide[];
  generator_metadata: Record<string, unknown>;
  config: Record<string, unknown>;
  tree: TreePayload;
}

export interface DeckEnvelope {
  /** Session id used in API paths. */
  deck_id: string;
  revision: number;
  deck: CanonicalDeck;
}

export interface LinkEntry {
  cell_index: number;
  similarity: string;
}

export interface LinksResponse {
  slide_id: string;
  links: LinkEntry[];
}

export interface OverviewCell {
  index: number;
  kind: "markdown" | "code";
  source: string;
  outputs: { kind: string; mime: string }[];
}

export interface TreeNodePayload {
  id: number;
  kind: "fake_root" | "header" | "text" | "code";
  header_level: number;
  source_cell: number | null;
  text: string;
  parent: number | null;
  children: number[];
}

export interface TreePayload {
  root_id: number;
  nodes: TreeNodePayload[];
}

export interface NotebookOverview {
  cells: OverviewCell[];
  tree: TreePayload;
}

export interface DeckConfigIn {
  title: string;
  presenter: string;
  audience: "technical" | "nontechnical";
  detail: 1 | 2 | 3;
  embedder?: string;
  summarizer?: string;
}
