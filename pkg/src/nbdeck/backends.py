"""Backend handle resolution shared by the CLI and the service.

The NBDECK_EMBEDDER_URL / NBDECK_SUMMARIZER_URL environment variables
override whatever backend was requested, so a deployment can point every
generation at a real model server without touching clients.
"""

from __future__ import annotations

import os

from .embedding import EmbedderHandle
from .summarizer import SummarizerHandle

EMBEDDER_ENV = "NBDECK_EMBEDDER_URL"
SUMMARIZER_ENV = "NBDECK_SUMMARIZER_URL"


def resolve_embedder(value: str = "builtin") -> EmbedderHandle:
    endpoint = os.environ.get(EMBEDDER_ENV) or (
        value if value and value != "builtin" else None
    )
    if endpoint:
        return EmbedderHandle(backend="remote", endpoint=endpoint)
    return EmbedderHandle()


def resolve_summarizer(value: str = "builtin") -> SummarizerHandle:
    endpoint = os.environ.get(SUMMARIZER_ENV) or (
        value if value and value != "builtin" else None
    )
    if endpoint:
        return SummarizerHandle(backend="remote", endpoint=endpoint)
    return SummarizerHandle()
