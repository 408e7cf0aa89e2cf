"""Deck generation and editing.

generate_deck runs the full pipeline: build the notebook tree, fit the
lexical embedder over the run's own corpus, rank and assign code leaves
per auto section, summarize each assigned cell into a bullet with
provenance back to its source cell, and attach the best plots/tables.
Prompt sections are filled with their editable seed text; auto sections
whose best candidates fall under the similarity floor still emit a slide,
flagged empty, so the user can simply delete it.

All edit operations are pure: they return a new deck and bump the
revision counter, leaving every untouched slide equal to before.
"""

from __future__ import annotations

import hashlib
import json
import uuid
from dataclasses import dataclass, field, replace

from .embedding import (
    EMBED_DIMENSION,
    HASH_FUNCTION,
    EmbedderHandle,
    build_embedder,
)
from .errors import CannotDeleteTitle, InvalidBulletText, UnknownSlide
from .matcher import GAMMA, TAU, assign_cells, leaf_sentences, rank_sections, select_outputs
from .notebook import NotebookDocument, OutputArtifact
from .summarizer import (
    MIN_TOKENS_BY_DETAIL,
    SummarizerHandle,
    build_summarizer,
    request_for,
)
from .templates import OutlineTemplate, template_for
from .tree import NotebookTree, build_tree, leaf_context

_BLOCK_MARKERS = ("#", ">", "```", "- ", "* ", "+ ")


@dataclass(frozen=True)
class DeckConfig:
    title: str
    presenter: str
    audience: str  # "technical" | "nontechnical"
    detail: int  # 1 | 2 | 3
    embedder: EmbedderHandle = EmbedderHandle()
    summarizer: SummarizerHandle = SummarizerHandle()

    def min_tokens(self) -> int:
        return MIN_TOKENS_BY_DETAIL[self.detail]


@dataclass(frozen=True)
class Bullet:
    text: str
    provenance: tuple[tuple[int, float], ...] = ()
    origin: str = "generated"  # "generated" | "prompt" | "user"
    short: bool = False


@dataclass(frozen=True)
class Slide:
    id: str
    section_id: str
    title: str
    bullets: tuple[Bullet, ...] = ()
    attachments: tuple[OutputArtifact, ...] = ()
    origin: str = "auto"  # "auto" | "prompt" | "title_page" | "user"
    empty_auto: bool = False


@dataclass(frozen=True)
class SlideDeck:
    deck_id: str
    config: DeckConfig
    slides: tuple[Slide, ...]
    tree: NotebookTree
    generator_metadata: dict = field(default_factory=dict)
    revision: int = 0

    def slide(self, slide_id: str) -> Slide:
        for slide in self.slides:
            if slide.id == slide_id:
                return slide
        raise UnknownSlide(slide_id)


def _pipeline_corpus(tree: NotebookTree, template: OutlineTemplate) -> list[str]:
    """Every sentence the run will embed, for fitting the IDF table."""
    from .embedding import segment_sentences

    texts: list[str] = []
    for node in tree.nodes:
        if node.kind in ("header", "text"):
            texts.extend(s.text for s in segment_sentences(node.text))
        elif node.kind == "code":
            texts.extend(s.text for s in leaf_sentences(node))
    for spec in template.auto_sections():
        texts.extend(s.text for s in segment_sentences(spec.query, origin="query"))
    return texts


def _deck_id(doc: NotebookDocument, config: DeckConfig, template: OutlineTemplate) -> str:
    basis = {
        "cells": [
            [c.kind, c.source, [[a.kind, a.mime, a.data] for a in c.outputs]]
            for c in doc.cells
        ],
        "config": [
            config.title,
            config.presenter,
            config.audience,
            config.detail,
            config.embedder.backend,
            config.embedder.endpoint or "",
            config.embedder.dimension,
            config.summarizer.backend,
            config.summarizer.endpoint or "",
        ],
        "template": [template.version, [s.id for s in template.sections]],
    }
    digest = hashlib.sha256(
        json.dumps(basis, sort_keys=True, ensure_ascii=False).encode("utf-8")
    ).hexdigest()
    return f"deck-{digest[:16]}"


def _prompt_bullets(prompt_body: str) -> tuple[Bullet, ...]:
    return tuple(
        Bullet(text=line.strip(), origin="prompt")
        for line in prompt_body.split("\n")
        if line.strip()
    )


def generate_deck(
    doc: NotebookDocument,
    config: DeckConfig,
    template: OutlineTemplate | None = None,
) -> SlideDeck:
    """Generate the full deck for a parsed notebook.

    Deterministic with builtin backends; remote backend failures propagate
    as RemoteUnavailable and abort generation.
    """
    template = template or template_for(config.audience)
    tree = build_tree(doc)
    embedder = build_embedder(config.embedder, _pipeline_corpus(tree, template))
    summarizer = build_summarizer(config.summarizer)

    ranking = rank_sections(tree, template, embedder)
    assignment = assign_cells(ranking, template)
    attachments = select_outputs(assignment, doc)
    min_tokens = config.min_tokens()

    slides: list[Slide] = [
        Slide(
            id="title",
            section_id="",
            title=config.title,
            bullets=(Bullet(text=config.presenter, origin="prompt"),)
            if config.presenter
            else (),
            origin="title_page",
        )
    ]

    for spec in template.sections:
        if spec.mode == "prompt":
            slides.append(
                Slide(
                    id=spec.id,
                    section_id=spec.id,
                    title=spec.title,
                    bullets=_prompt_bullets(spec.prompt_body),
                    origin="prompt",
                )
            )
            continue

        entries = sorted(
            assignment.sections.get(spec.id, []), key=lambda e: e.cell_index
        )
        bullets = []
        for entry in entries:
            leaf = tree.node(entry.leaf_id)
            req = request_for(leaf.text, leaf_context(tree, entry.leaf_id), min_tokens)
            summary = summarizer.summarize(req)
            bullets.append(
                Bullet(
                    text=summary.text,
                    provenance=((entry.cell_index, entry.score),),
                    origin="generated",
                    short=summary.short,
                )
            )
        slides.append(
            Slide(
                id=spec.id,
                section_id=spec.id,
                title=spec.title,
                bullets=tuple(bullets),
                attachments=tuple(attachments.get(spec.id, [])),
                origin="auto",
                empty_auto=not bullets,
            )
        )

    return SlideDeck(
        deck_id=_deck_id(doc, config, template),
        config=config,
        slides=tuple(slides),
        tree=tree,
        generator_metadata={
            "embed_dimension": config.embedder.dimension or EMBED_DIMENSION,
            "hash_function": HASH_FUNCTION,
            "tau": TAU,
            "gamma": GAMMA,
            "template_version": template.version,
        },
        revision=0,
    )


def _validate_inline(text: str) -> str:
    """Bullets use inline markup only; block-level markdown is rejected."""
    if not text.strip():
        raise InvalidBulletText("bullet text is empty")
    if "\n" in text:
        raise InvalidBulletText("bullet text must be a single line")
    stripped = text.lstrip()
    for marker in _BLOCK_MARKERS:
        if stripped.startswith(marker):
            raise InvalidBulletText(
                f"bullet text may not start a block element ({marker!r})"
            )
    return text


def _replace_slide(deck: SlideDeck, index: int, slide: Slide) -> SlideDeck:
    slides = list(deck.slides)
    slides[index] = slide
    return replace(deck, slides=tuple(slides), revision=deck.revision + 1)


def _slide_index(deck: SlideDeck, slide_id: str) -> int:
    for i, slide in enumerate(deck.slides):
        if slide.id == slide_id:
            return i
    raise UnknownSlide(slide_id)


def edit_slide(deck: SlideDeck, slide_id: str, patch: dict) -> SlideDeck:
    """Apply a {title?, bullets?} patch to one slide.

    Edited bullet texts become user-origin and lose provenance; texts left
    byte-identical keep their original bullet untouched.
    """
    index = _slide_index(deck, slide_id)
    slide = deck.slides[index]

    title = patch.get("title", slide.title)
    if "title" in patch and "\n" in title:
        raise InvalidBulletText("slide title must be a single line")

    bullets = slide.bullets
    if "bullets" in patch and patch["bullets"] is not None:
        new_texts = [_validate_inline(t) for t in patch["bullets"]]
        remaining = list(slide.bullets)
        rebuilt = []
        for text in new_texts:
            match = next((b for b in remaining if b.text == text), None)
            if match is not None:
                remaining.remove(match)
                rebuilt.append(match)
            else:
                rebuilt.append(Bullet(text=text, origin="user"))
        bullets = tuple(rebuilt)

    updated = replace(
        slide,
        title=title,
        bullets=bullets,
        empty_auto=slide.origin == "auto" and not bullets,
    )
    return _replace_slide(deck, index, updated)


def add_slide(deck: SlideDeck, after: str, title: str) -> SlideDeck:
    """Insert a new user slide immediately after the anchor slide."""
    index = _slide_index(deck, after)
    slide = Slide(
        id=f"user-{uuid.uuid4().hex[:8]}",
        section_id="",
        title=title,
        origin="user",
    )
    slides = list(deck.slides)
    slides.insert(index + 1, slide)
    return replace(deck, slides=tuple(slides), revision=deck.revision + 1)


def delete_slide(deck: SlideDeck, slide_id: str) -> SlideDeck:
    index = _slide_index(deck, slide_id)
    if deck.slides[index].origin == "title_page":
        raise CannotDeleteTitle(slide_id)
    slides = list(deck.slides)
    del slides[index]
    return replace(deck, slides=tuple(slides), revision=deck.revision + 1)


def links_for(deck: SlideDeck, slide_id: str) -> list[tuple[int, float]]:
    """Provenance links of a slide: per-cell maximum similarity, sorted
    by descending similarity."""
    slide = deck.slide(slide_id)
    best: dict[int, float] = {}
    for bullet in slide.bullets:
        for cell_index, similarity in bullet.provenance:
            if similarity > best.get(cell_index, -1.0):
                best[cell_index] = similarity
    return sorted(best.items(), key=lambda item: (-item[1], item[0]))
