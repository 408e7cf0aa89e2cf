"""Sentence segmentation and text embedding.

The built-in embedder is a deterministic lexical model: lowercase tokens
(with camelCase/snake_case identifiers split), TF weights multiplied by an
IDF table fitted once per pipeline run, hashed into a fixed 256-bucket
vector with a sign bit, then L2-normalized. It is hermetic and
reproducible; a remote sentence-embedding model can be swapped in through
the same handle without touching callers.
"""

from __future__ import annotations

import hashlib
import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Protocol

import numpy as np

from .errors import DimensionMismatch, RemoteUnavailable

EMBED_DIMENSION = 256
HASH_FUNCTION = "blake2b"

# Protected from end-of-sentence splitting.
_ABBREVIATIONS = (
    "e.g.", "i.e.", "Fig.", "fig.", "vs.", "etc.", "cf.",
    "et al.", "al.", "Dr.", "Mr.", "Ms.", "No.", "approx.",
)
_ABBREV_MARK = ""

_MD_LINK_RE = re.compile(r"!?\[([^\]]*)\]\([^)]*\)")
_MD_LIST_RE = re.compile(r"(?m)^\s*(?:[-+]|\d+\.)\s+")
_MD_SYNTAX_RE = re.compile(r"[#*_`>|~]")
_SENTENCE_SPLIT_RE = re.compile(r"(?<=[.!?])\s+|\n+")
_TOKEN_RE = re.compile(r"[A-Za-z0-9_]+")
_CAMEL_RE = re.compile(r"[A-Z]+(?=[A-Z][a-z])|[A-Z]?[a-z]+|[A-Z]+|[0-9]+")


@dataclass(frozen=True)
class Sentence:
    text: str
    origin: str = "markdown"  # "query" | "markdown" | "comment" | "identifier"


@dataclass(frozen=True)
class EmbedderHandle:
    """Descriptor of an embedding backend; serializable into deck metadata."""

    backend: str = "builtin_lexical"  # or "remote"
    endpoint: str | None = None
    dimension: int = EMBED_DIMENSION


def strip_markdown(text: str) -> str:
    text = _MD_LINK_RE.sub(r"\1", text)
    text = _MD_LIST_RE.sub("", text)
    return _MD_SYNTAX_RE.sub(" ", text)


def segment_sentences(text: str, origin: str = "markdown") -> list[Sentence]:
    """Split text on sentence-final punctuation and newlines.

    A fixed abbreviation list (e.g., "e.g.", "Fig.") is protected from
    splitting; markdown syntax characters are stripped; empty results are
    dropped.
    """
    if not text or not text.strip():
        return []
    cleaned = strip_markdown(text)
    for abbrev in _ABBREVIATIONS:
        cleaned = cleaned.replace(abbrev, abbrev.replace(".", _ABBREV_MARK))
    parts = _SENTENCE_SPLIT_RE.split(cleaned)
    sentences = []
    for part in parts:
        restored = " ".join(part.replace(_ABBREV_MARK, ".").split())
        if restored:
            sentences.append(Sentence(text=restored, origin=origin))
    return sentences


def tokenize(text: str) -> list[str]:
    """Lowercase alphanumeric tokens with identifier splitting.

    "trainModel" and "train_model" both yield ["train", "model"].
    """
    tokens = []
    for raw in _TOKEN_RE.findall(text):
        for piece in raw.split("_"):
            if not piece:
                continue
            for sub in _CAMEL_RE.findall(piece):
                tokens.append(sub.lower())
    return tokens


def _bucket_and_sign(token: str, dimension: int) -> tuple[int, float]:
    digest = hashlib.blake2b(token.encode("utf-8"), digest_size=8).digest()
    bucket = int.from_bytes(digest[:4], "big") % dimension
    sign = 1.0 if digest[4] % 2 == 0 else -1.0
    return bucket, sign


class Embedder(Protocol):
    dimension: int

    def embed_text(self, text: str) -> np.ndarray: ...

    def embed_batch(self, texts: list[str]) -> list[np.ndarray]: ...


class LexicalEmbedder:
    """Deterministic hashed TF-IDF embedder.

    The IDF table is fitted once over the corpus passed to the
    constructor (all notebook sentences plus template queries in a
    pipeline run); after that the instance is stateless and thread-safe.
    """

    def __init__(self, corpus: Iterable[str] = (), dimension: int = EMBED_DIMENSION):
        self.dimension = dimension
        doc_freq: Counter[str] = Counter()
        n_docs = 0
        for text in corpus:
            n_docs += 1
            doc_freq.update(set(tokenize(text)))
        self._n_docs = n_docs
        self._idf = {
            token: math.log((1.0 + n_docs) / (1.0 + df)) + 1.0
            for token, df in doc_freq.items()
        }
        self._default_idf = math.log(1.0 + n_docs) + 1.0

    def _idf_of(self, token: str) -> float:
        return self._idf.get(token, self._default_idf)

    def embed_text(self, text: str) -> np.ndarray:
        vec = np.zeros(self.dimension, dtype=np.float64)
        counts = Counter(tokenize(text))
        if not counts:
            return vec
        for token, count in counts.items():
            bucket, sign = _bucket_and_sign(token, self.dimension)
            vec[bucket] += sign * count * self._idf_of(token)
        norm = float(np.linalg.norm(vec))
        if norm > 0.0:
            vec /= norm
        return vec

    def embed_batch(self, texts: list[str]) -> list[np.ndarray]:
        return [self.embed_text(t) for t in texts]


class RemoteEmbedder:
    """Client for a remote sentence-embedding endpoint.

    Wire contract: POST {"texts": [...]} returns
    {"vectors": [[...], ...], "dimension": D}. Any transport failure or
    contract violation raises RemoteUnavailable; there is no silent
    fallback, because mixing backends inside one deck would break
    similarity comparability.
    """

    def __init__(self, endpoint: str, dimension: int = EMBED_DIMENSION, timeout: float = 30.0):
        self.endpoint = endpoint
        self.dimension = dimension
        self.timeout = timeout

    def embed_batch(self, texts: list[str]) -> list[np.ndarray]:
        import httpx

        try:
            response = httpx.post(
                self.endpoint, json={"texts": texts}, timeout=self.timeout
            )
            response.raise_for_status()
            payload = response.json()
        except Exception as exc:
            raise RemoteUnavailable(f"embedding endpoint failed: {exc}") from exc
        vectors = payload.get("vectors")
        if not isinstance(vectors, list) or len(vectors) != len(texts):
            raise RemoteUnavailable("embedding endpoint returned a malformed batch")
        declared = payload.get("dimension", self.dimension)
        out = []
        for vec in vectors:
            arr = np.asarray(vec, dtype=np.float64)
            if arr.shape != (declared,):
                raise RemoteUnavailable("embedding vector dimension mismatch")
            out.append(arr)
        self.dimension = declared
        return out

    def embed_text(self, text: str) -> np.ndarray:
        return self.embed_batch([text])[0]


def build_embedder(handle: EmbedderHandle, corpus: Iterable[str] = ()) -> Embedder:
    if handle.backend == "remote":
        if not handle.endpoint:
            raise RemoteUnavailable("remote embedder handle has no endpoint")
        return RemoteEmbedder(handle.endpoint, dimension=handle.dimension)
    return LexicalEmbedder(corpus, dimension=handle.dimension)


def embed(embedder: Embedder, sentence: Sentence) -> np.ndarray:
    return embedder.embed_text(sentence.text)


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    """Dot product of unit vectors; 0.0 when either side is the zero vector."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionMismatch(f"{a.shape} vs {b.shape}")
    norm_a = float(np.linalg.norm(a))
    norm_b = float(np.linalg.norm(b))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    value = float(np.dot(a, b) / (norm_a * norm_b))
    return max(-1.0, min(1.0, value))
