"""FastAPI service exposing deck generation, editing and export.

All deck state lives in the session store; handlers are thin wrappers
over the core package. Domain errors map onto HTTP status codes here and
nowhere else.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Query
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from .. import __version__
from ..backends import resolve_embedder, resolve_summarizer
from ..deck import DeckConfig, add_slide, delete_slide, edit_slide, generate_deck, links_for
from ..errors import (
    CannotDeleteTitle,
    InvalidBulletText,
    MalformedNotebook,
    NbdeckError,
    RemoteUnavailable,
    RevisionConflict,
    UnknownDeck,
    UnknownSlide,
    UnsupportedVersion,
)
from ..export import deck_to_canonical_dict, export_deck
from ..notebook import parse_notebook
from .schemas import (
    AddSlideRequest,
    CreateDeckRequest,
    DeckEnvelope,
    LinkEntry,
    LinksResponse,
    NotebookOverviewResponse,
    SlidePatchRequest,
)
from .sessions import SessionStore

_STATUS_BY_ERROR = (
    (UnknownDeck, 404),
    (UnknownSlide, 404),
    (RevisionConflict, 409),
    (CannotDeleteTitle, 409),
    (MalformedNotebook, 422),
    (UnsupportedVersion, 422),
    (InvalidBulletText, 422),
    (RemoteUnavailable, 502),
)

_EXPORT_FORMATS = {
    "json": ("canonical_json", "application/json", "deck.json"),
    "md": ("markdown", "text/markdown; charset=utf-8", "deck.md"),
    "html": ("html_slideshow", "text/html; charset=utf-8", "deck.html"),
}

_DEFAULT_STATIC = Path(__file__).resolve().parents[3] / "frontend" / "dist"


def _envelope(session) -> DeckEnvelope:
    return DeckEnvelope(
        deck_id=session.deck_id,
        revision=session.deck.revision,
        deck=deck_to_canonical_dict(session.deck),
    )


def create_app(
    sessions_dir: str | None = None,
    static_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="nbdeck", version=__version__)
    store = SessionStore(sessions_dir)
    app.state.store = store

    def _register(error_type, status):
        @app.exception_handler(error_type)
        async def handler(request, exc, status=status):
            return JSONResponse(status_code=status, content={"detail": str(exc)})

    for error_type, status in _STATUS_BY_ERROR:
        _register(error_type, status)

    @app.exception_handler(NbdeckError)
    async def fallback_handler(request, exc):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.post("/api/decks", response_model=DeckEnvelope, status_code=201)
    def create_deck(request: CreateDeckRequest) -> DeckEnvelope:
        raw = (
            request.notebook
            if isinstance(request.notebook, str)
            else json.dumps(request.notebook)
        )
        doc = parse_notebook(raw)
        config = DeckConfig(
            title=request.config.title,
            presenter=request.config.presenter,
            audience=request.config.audience,
            detail=request.config.detail,
            embedder=resolve_embedder(request.config.embedder),
            summarizer=resolve_summarizer(request.config.summarizer),
        )
        deck = generate_deck(doc, config)
        session = store.create(deck, doc)
        return _envelope(session)

    @app.get("/api/decks/{deck_id}", response_model=DeckEnvelope)
    def get_deck(deck_id: str) -> DeckEnvelope:
        return _envelope(store.get(deck_id))

    @app.patch("/api/decks/{deck_id}/slides/{slide_id}", response_model=DeckEnvelope)
    def patch_slide(deck_id: str, slide_id: str, request: SlidePatchRequest) -> DeckEnvelope:
        patch = {}
        if request.title is not None:
            patch["title"] = request.title
        if request.bullets is not None:
            patch["bullets"] = request.bullets
        store.mutate(
            deck_id,
            request.expected_revision,
            lambda deck: edit_slide(deck, slide_id, patch),
        )
        return _envelope(store.get(deck_id))

    @app.post("/api/decks/{deck_id}/slides", response_model=DeckEnvelope)
    def add_slide_route(deck_id: str, request: AddSlideRequest) -> DeckEnvelope:
        store.mutate(
            deck_id,
            request.expected_revision,
            lambda deck: add_slide(deck, request.after, request.title),
        )
        return _envelope(store.get(deck_id))

    @app.delete("/api/decks/{deck_id}/slides/{slide_id}", response_model=DeckEnvelope)
    def delete_slide_route(
        deck_id: str, slide_id: str, expected_revision: int = Query(...)
    ) -> DeckEnvelope:
        store.mutate(
            deck_id,
            expected_revision,
            lambda deck: delete_slide(deck, slide_id),
        )
        return _envelope(store.get(deck_id))

    @app.get("/api/decks/{deck_id}/links", response_model=LinksResponse)
    def get_links(deck_id: str, slide: str = Query(...)) -> LinksResponse:
        session = store.get(deck_id)
        links = links_for(session.deck, slide)
        return LinksResponse(
            slide_id=slide,
            links=[
                LinkEntry(cell_index=cell, similarity=f"{sim:.6f}")
                for cell, sim in links
            ],
        )

    @app.get("/api/decks/{deck_id}/notebook", response_model=NotebookOverviewResponse)
    def get_notebook_overview(deck_id: str) -> NotebookOverviewResponse:
        session = store.get(deck_id)
        return NotebookOverviewResponse(
            cells=session.cells, tree=session.deck.tree.to_dict()
        )

    @app.get("/api/decks/{deck_id}/export")
    def export_route(deck_id: str, format: str = Query("json")) -> Response:
        if format not in _EXPORT_FORMATS:
            return JSONResponse(
                status_code=422,
                content={"detail": f"unknown export format {format!r}"},
            )
        session = store.get(deck_id)
        fmt, media_type, filename = _EXPORT_FORMATS[format]
        archive = export_deck(session.deck, fmt)
        return Response(
            content=archive.payload,
            media_type=media_type,
            headers={"Content-Disposition": f'attachment; filename="{filename}"'},
        )

    static_path = Path(static_dir) if static_dir else _DEFAULT_STATIC
    if static_path.is_dir():
        app.mount("/", StaticFiles(directory=str(static_path), html=True), name="ui")

    return app
