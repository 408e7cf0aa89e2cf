"""In-memory deck sessions with optional directory persistence.

Each session owns one deck and a lock; mutations are serialized per deck
and validated against the caller's expected revision (optimistic
concurrency). With a sessions directory configured, every accepted state
is written as one JSON file per deck and reloaded lazily on a cache miss,
so a restarted server keeps serving existing decks.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from ..deck import SlideDeck
from ..errors import RevisionConflict, UnknownDeck
from ..export import deck_to_canonical_dict, import_deck
from ..notebook import NotebookDocument


@dataclass
class DeckSession:
    deck_id: str
    deck: SlideDeck
    created_at: float
    cells: list[dict] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def revision(self) -> int:
        return self.deck.revision


def _cell_summaries(doc: NotebookDocument) -> list[dict]:
    return [
        {
            "index": cell.index,
            "kind": cell.kind,
            "source": cell.source,
            "outputs": [{"kind": a.kind, "mime": a.mime} for a in cell.outputs],
        }
        for cell in doc.cells
    ]


class SessionStore:
    def __init__(self, directory: str | Path | None = None):
        self._sessions: dict[str, DeckSession] = {}
        self._registry_lock = threading.Lock()
        self._directory = Path(directory) if directory else None
        if self._directory:
            self._directory.mkdir(parents=True, exist_ok=True)

    def create(self, deck: SlideDeck, doc: NotebookDocument) -> DeckSession:
        session = DeckSession(
            deck_id=uuid.uuid4().hex,
            deck=deck,
            created_at=time.time(),
            cells=_cell_summaries(doc),
        )
        with self._registry_lock:
            self._sessions[session.deck_id] = session
        self._persist(session)
        return session

    def get(self, deck_id: str) -> DeckSession:
        with self._registry_lock:
            session = self._sessions.get(deck_id)
        if session is None:
            session = self._load(deck_id)
        if session is None:
            raise UnknownDeck(deck_id)
        return session

    def mutate(
        self,
        deck_id: str,
        expected_revision: int,
        operation: Callable[[SlideDeck], SlideDeck],
    ) -> SlideDeck:
        session = self.get(deck_id)
        with session.lock:
            if session.deck.revision != expected_revision:
                raise RevisionConflict(
                    f"expected revision {expected_revision}, "
                    f"deck is at {session.deck.revision}"
                )
            session.deck = operation(session.deck)
            self._persist(session)
            return session.deck

    def _path(self, deck_id: str) -> Path | None:
        if not self._directory:
            return None
        return self._directory / f"{deck_id}.json"

    def _persist(self, session: DeckSession) -> None:
        path = self._path(session.deck_id)
        if not path:
            return
        payload = {
            "deck_id": session.deck_id,
            "created_at": session.created_at,
            "cells": session.cells,
            "deck": deck_to_canonical_dict(session.deck),
        }
        path.write_text(
            json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False),
            encoding="utf-8",
        )

    def _load(self, deck_id: str) -> DeckSession | None:
        path = self._path(deck_id)
        if not path or not path.exists():
            return None
        payload = json.loads(path.read_text(encoding="utf-8"))
        session = DeckSession(
            deck_id=payload["deck_id"],
            deck=import_deck(json.dumps(payload["deck"]).encode("utf-8")),
            created_at=payload.get("created_at", 0.0),
            cells=payload.get("cells", []),
        )
        with self._registry_lock:
            self._sessions.setdefault(session.deck_id, session)
            return self._sessions[session.deck_id]
