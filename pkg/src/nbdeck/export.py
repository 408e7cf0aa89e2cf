"""Deck serialization and download formats.

canonical_json is the interchange format: sorted keys, two-space indent,
similarities fixed to six decimals. It round-trips losslessly because
similarity scores are already quantized to six decimals at scoring time.
markdown and html_slideshow are lossy presentation exports (no
provenance); the HTML file is fully self-contained with images inlined as
data URIs.
"""

from __future__ import annotations

import html as html_lib
import json
import re
from dataclasses import dataclass

from .deck import Bullet, DeckConfig, Slide, SlideDeck
from .embedding import EmbedderHandle
from .errors import MalformedDeck, VersionMismatch
from .notebook import OutputArtifact
from .summarizer import SummarizerHandle
from .templates import TEMPLATE_VERSION
from .tree import NotebookTree

FORMATS = ("canonical_json", "markdown", "html_slideshow")


@dataclass(frozen=True)
class DeckArchive:
    format: str
    payload: bytes


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def deck_to_canonical_dict(deck: SlideDeck) -> dict:
    return {
        "deck_id": deck.deck_id,
        "revision": deck.revision,
        "config": {
            "title": deck.config.title,
            "presenter": deck.config.presenter,
            "audience": deck.config.audience,
            "detail": deck.config.detail,
            "embedder": {
                "backend": deck.config.embedder.backend,
                "endpoint": deck.config.embedder.endpoint,
                "dimension": deck.config.embedder.dimension,
            },
            "summarizer": {
                "backend": deck.config.summarizer.backend,
                "endpoint": deck.config.summarizer.endpoint,
            },
        },
        "generator_metadata": {
            "embed_dimension": deck.generator_metadata.get("embed_dimension"),
            "hash_function": deck.generator_metadata.get("hash_function"),
            "tau": _fmt(deck.generator_metadata.get("tau", 0.0)),
            "gamma": _fmt(deck.generator_metadata.get("gamma", 0.0)),
            "template_version": deck.generator_metadata.get("template_version"),
        },
        "slides": [
            {
                "id": slide.id,
                "section_id": slide.section_id,
                "title": slide.title,
                "origin": slide.origin,
                "empty_auto": slide.empty_auto,
                "bullets": [
                    {
                        "text": b.text,
                        "origin": b.origin,
                        "short": b.short,
                        "provenance": [
                            {"cell_index": cell, "similarity": _fmt(sim)}
                            for cell, sim in b.provenance
                        ],
                    }
                    for b in slide.bullets
                ],
                "attachments": [
                    {
                        "kind": a.kind,
                        "mime": a.mime,
                        "data": a.data,
                        "cell_index": a.cell_index,
                    }
                    for a in slide.attachments
                ],
            }
            for slide in deck.slides
        ],
        "tree": deck.tree.to_dict(),
    }


def canonical_json_bytes(deck: SlideDeck) -> bytes:
    payload = json.dumps(
        deck_to_canonical_dict(deck), sort_keys=True, indent=2, ensure_ascii=False
    )
    return (payload + "\n").encode("utf-8")


_INLINE_RULES = (
    (re.compile(r"\*\*([^*]+)\*\*"), r"<strong>\1</strong>"),
    (re.compile(r"\*([^*]+)\*"), r"<em>\1</em>"),
    (re.compile(r"`([^`]+)`"), r"<code>\1</code>"),
)


def render_inline(text: str) -> str:
    """Markdown-like inline grammar (bold/italic/code) to HTML, escaped."""
    out = html_lib.escape(text)
    for pattern, replacement in _INLINE_RULES:
        out = pattern.sub(replacement, out)
    return out


def _data_uri(artifact: OutputArtifact) -> str:
    data = "".join(artifact.data.split())
    return f"data:{artifact.mime};base64,{data}"


def _markdown_slide(slide: Slide) -> str:
    lines = [f"# {slide.title}", ""]
    for bullet in slide.bullets:
        lines.append(f"- {bullet.text}")
    for artifact in slide.attachments:
        if artifact.kind == "image":
            lines.append("")
            lines.append(f"![output]({_data_uri(artifact)})")
        elif artifact.kind == "table":
            lines.append("")
            lines.append(artifact.data)
    return "\n".join(lines).rstrip() + "\n"


def export_markdown(deck: SlideDeck) -> str:
    return "\n---\n\n".join(_markdown_slide(slide) for slide in deck.slides)


_HTML_STYLE = """
body { font-family: sans-serif; margin: 0; background: #222; }
section.slide { display: none; box-sizing: border-box; min-height: 100vh;
  padding: 8vh 10vw; background: #fff; }
section.slide.active { display: block; }
section.slide h1 { font-size: 2.2em; }
section.slide li { font-size: 1.3em; margin: 0.4em 0; }
section.slide img { max-width: 70%; max-height: 50vh; display: block; margin: 1em 0; }
.nav { position: fixed; bottom: 1em; right: 1em; font-size: 1em; color: #555; }
"""

_HTML_SCRIPT = """
var current = 0;
var slides = document.querySelectorAll('section.slide');
function show(i) {
  current = Math.max(0, Math.min(slides.length - 1, i));
  slides.forEach(function (s, j) { s.classList.toggle('active', j === current); });
  document.getElementById('pos').textContent = (current + 1) + ' / ' + slides.length;
}
document.addEventListener('keydown', function (e) {
  if (e.key === 'ArrowRight' || e.key === ' ') show(current + 1);
  if (e.key === 'ArrowLeft') show(current - 1);
});
document.addEventListener('click', function () { show(current + 1); });
show(0);
"""


def export_html(deck: SlideDeck) -> str:
    sections = []
    for slide in deck.slides:
        parts = [f"<h1>{html_lib.escape(slide.title)}</h1>"]
        if slide.bullets:
            items = "".join(
                f"<li>{render_inline(b.text)}</li>" for b in slide.bullets
            )
            parts.append(f"<ul>{items}</ul>")
        for artifact in slide.attachments:
            if artifact.kind == "image":
                parts.append(f'<img src="{_data_uri(artifact)}" alt="output">')
            elif artifact.kind == "table":
                parts.append(artifact.data)
        sections.append(f'<section class="slide">{"".join(parts)}</section>')
    title = html_lib.escape(deck.config.title or "Slides")
    return (
        "<!DOCTYPE html>\n"
        f'<html lang="en"><head><meta charset="utf-8"><title>{title}</title>'
        f"<style>{_HTML_STYLE}</style></head><body>\n"
        + "\n".join(sections)
        + f'\n<div class="nav"><span id="pos"></span></div>'
        f"<script>{_HTML_SCRIPT}</script></body></html>\n"
    )


def export_deck(deck: SlideDeck, format: str = "canonical_json") -> DeckArchive:
    if format == "canonical_json":
        return DeckArchive(format=format, payload=canonical_json_bytes(deck))
    if format == "markdown":
        return DeckArchive(format=format, payload=export_markdown(deck).encode("utf-8"))
    if format == "html_slideshow":
        return DeckArchive(format=format, payload=export_html(deck).encode("utf-8"))
    raise ValueError(f"unknown export format {format!r}")


def _require(payload: dict, key: str):
    if key not in payload:
        raise MalformedDeck(f"missing key {key!r}")
    return payload[key]


def import_deck(payload: bytes) -> SlideDeck:
    """Rebuild a deck from canonical_json bytes.

    Rejects payloads from a different template version and anything that
    does not look like a canonical archive.
    """
    try:
        obj = json.loads(payload.decode("utf-8") if isinstance(payload, bytes) else payload)
    except (ValueError, UnicodeDecodeError) as exc:
        raise MalformedDeck(f"not canonical deck JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise MalformedDeck("canonical deck JSON must be an object")

    metadata = _require(obj, "generator_metadata")
    version = metadata.get("template_version")
    if version != TEMPLATE_VERSION:
        raise VersionMismatch(
            f"deck template version {version!r}, supported {TEMPLATE_VERSION!r}"
        )

    try:
        config_obj = _require(obj, "config")
        config = DeckConfig(
            title=config_obj["title"],
            presenter=config_obj["presenter"],
            audience=config_obj["audience"],
            detail=int(config_obj["detail"]),
            embedder=EmbedderHandle(
                backend=config_obj["embedder"]["backend"],
                endpoint=config_obj["embedder"]["endpoint"],
                dimension=int(config_obj["embedder"]["dimension"]),
            ),
            summarizer=SummarizerHandle(
                backend=config_obj["summarizer"]["backend"],
                endpoint=config_obj["summarizer"]["endpoint"],
            ),
        )
        slides = []
        for raw in _require(obj, "slides"):
            bullets = tuple(
                Bullet(
                    text=b["text"],
                    origin=b["origin"],
                    short=bool(b["short"]),
                    provenance=tuple(
                        (int(p["cell_index"]), float(p["similarity"]))
                        for p in b["provenance"]
                    ),
                )
                for b in raw["bullets"]
            )
            attachments = tuple(
                OutputArtifact(
                    kind=a["kind"],
                    mime=a["mime"],
                    data=a["data"],
                    cell_index=int(a["cell_index"]),
                )
                for a in raw["attachments"]
            )
            slides.append(
                Slide(
                    id=raw["id"],
                    section_id=raw["section_id"],
                    title=raw["title"],
                    bullets=bullets,
                    attachments=attachments,
                    origin=raw["origin"],
                    empty_auto=bool(raw["empty_auto"]),
                )
            )
        deck = SlideDeck(
            deck_id=_require(obj, "deck_id"),
            config=config,
            slides=tuple(slides),
            tree=NotebookTree.from_dict(_require(obj, "tree")),
            generator_metadata={
                "embed_dimension": int(metadata["embed_dimension"]),
                "hash_function": metadata["hash_function"],
                "tau": float(metadata["tau"]),
                "gamma": float(metadata["gamma"]),
                "template_version": metadata["template_version"],
            },
            revision=int(_require(obj, "revision")),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedDeck(f"invalid canonical deck structure: {exc}") from exc
    return deck
