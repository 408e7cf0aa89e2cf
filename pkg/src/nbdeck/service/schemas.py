"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from typing import Literal, Union

from pydantic import BaseModel, Field


class DeckConfigIn(BaseModel):
    title: str = ""
    presenter: str = ""
    audience: Literal["technical", "nontechnical"] = "technical"
    detail: int = Field(default=2, ge=1, le=3)
    embedder: str = "builtin"  # "builtin" or a remote endpoint URL
    summarizer: str = "builtin"


class CreateDeckRequest(BaseModel):
    notebook: Union[str, dict]  # raw .ipynb text, or the parsed JSON object
    config: DeckConfigIn = DeckConfigIn()


class SlidePatchRequest(BaseModel):
    expected_revision: int
    title: str | None = None
    bullets: list[str] | None = None


class AddSlideRequest(BaseModel):
    expected_revision: int
    after: str
    title: str


class DeckEnvelope(BaseModel):
    """deck_id here is the session id used in API paths; the canonical
    payload inside carries its own content-derived deck id."""

    deck_id: str
    revision: int
    deck: dict


class LinkEntry(BaseModel):
    cell_index: int
    similarity: str  # canonical six-decimal form


class LinksResponse(BaseModel):
    slide_id: str
    links: list[LinkEntry]


class NotebookCellOut(BaseModel):
    index: int
    kind: str
    source: str
    outputs: list[dict] = []


class NotebookOverviewResponse(BaseModel):
    cells: list[NotebookCellOut]
    tree: dict


class ErrorResponse(BaseModel):
    detail: str
