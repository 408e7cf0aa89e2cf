"""Scoring and assignment of code leaves to outline sections.

Each code leaf is scored against a section query as the maximum over two
evidence channels: its own code channel (comment sentences plus one
synthetic sentence of called identifiers) and its markdown ancestry, where
an ancestor's similarity decays by GAMMA for every heading level between
it and the leaf. Leaves are ranked per section, the top k are selected,
and cross-section conflicts resolve to the leaf's closest section with
backfill until a fixed point.

Scores are quantized to six decimals as soon as they are computed so that
ranking, assignment and the canonical serialized form all see the exact
same numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .codescan import extract_comments, identifier_sentence
from .embedding import Embedder, Sentence, cosine, segment_sentences
from .notebook import NotebookDocument, OutputArtifact
from .templates import OutlineTemplate
from .tree import MarkdownContext, NotebookTree, TreeNode, leaf_context

GAMMA = 0.8
TAU = 0.15
MAX_ATTACHMENTS_PER_SECTION = 2

_QUANT = 6  # decimal places kept for similarity scores


@dataclass(frozen=True)
class LeafScore:
    leaf_id: int
    section_id: str
    score: float
    best_evidence: str  # "code" | "markdown"
    evidence_text: str
    cell_index: int


@dataclass(frozen=True)
class AssignedLeaf:
    leaf_id: int
    cell_index: int
    score: float


@dataclass
class SectionAssignment:
    sections: dict[str, list[AssignedLeaf]] = field(default_factory=dict)
    unassigned: list[int] = field(default_factory=list)


def leaf_sentences(leaf: TreeNode) -> list[Sentence]:
    """Code-channel sentences: comments plus the identifier sentence."""
    sentences = [
        Sentence(text=c, origin="comment") for c in extract_comments(leaf.text)
    ]
    idents = identifier_sentence(leaf.text)
    if idents:
        sentences.append(Sentence(text=idents, origin="identifier"))
    return sentences


def _quantize(value: float) -> float:
    return round(value, _QUANT)


def score_leaf(
    query_vecs: list[np.ndarray],
    leaf: TreeNode,
    ctx: MarkdownContext,
    embedder: Embedder,
    section_id: str = "",
) -> LeafScore:
    """Score one leaf against one section's query vectors.

    score = max over the code channel and the depth-decayed markdown
    channel, clamped to [0, 1]; a leaf with no sentences scores 0.
    """
    best = 0.0
    best_channel = "code"
    best_text = ""

    for sentence in leaf_sentences(leaf):
        vec = embedder.embed_text(sentence.text)
        for qv in query_vecs:
            sim = cosine(qv, vec)
            if sim > best:
                best, best_channel, best_text = sim, "code", sentence.text

    for entry in ctx.entries:
        decay = GAMMA ** entry.depth
        for text in entry.texts:
            vec = embedder.embed_text(text)
            for qv in query_vecs:
                sim = cosine(qv, vec) * decay
                if sim > best:
                    best, best_channel, best_text = sim, "markdown", text

    return LeafScore(
        leaf_id=leaf.id,
        section_id=section_id,
        score=_quantize(max(0.0, min(1.0, best))),
        best_evidence=best_channel,
        evidence_text=best_text,
        cell_index=leaf.source_cell if leaf.source_cell is not None else -1,
    )


def rank_sections(
    tree: NotebookTree,
    template: OutlineTemplate,
    embedder: Embedder,
) -> dict[str, list[LeafScore]]:
    """Rank every code leaf for every auto section.

    Lists are sorted by descending score with ties broken by ascending
    cell index; prompt sections receive no ranking.
    """
    leaves = tree.code_leaves()
    contexts = {leaf.id: leaf_context(tree, leaf.id) for leaf in leaves}

    ranking: dict[str, list[LeafScore]] = {}
    for spec in template.auto_sections():
        queries = segment_sentences(spec.query, origin="query")
        query_vecs = [embedder.embed_text(q.text) for q in queries]
        scores = [
            score_leaf(query_vecs, leaf, contexts[leaf.id], embedder, spec.id)
            for leaf in leaves
        ]
        scores.sort(key=lambda ls: (-ls.score, ls.cell_index))
        ranking[spec.id] = scores
    return ranking


def assign_cells(
    ranking: dict[str, list[LeafScore]],
    template: OutlineTemplate,
    tau: float = TAU,
) -> SectionAssignment:
    """Resolve per-section top-k selections into an exclusive assignment.

    Iteratively: each auto section provisionally takes its k best eligible
    leaves (score >= tau); any leaf held by several sections is kept only
    where its score is highest (ties go to the section earlier in template
    order) and barred from the losers, whose vacancies backfill from their
    next-ranked eligible leaf. Candidacies only ever shrink, so the loop
    reaches a fixed point.
    """
    order = [spec.id for spec in template.auto_sections() if spec.id in ranking]
    position = {section_id: i for i, section_id in enumerate(order)}
    k_of = {spec.id: spec.k for spec in template.auto_sections()}
    barred: dict[str, set[int]] = {section_id: set() for section_id in order}

    provisional: dict[str, list[LeafScore]] = {}
    while True:
        provisional = {}
        for section_id in order:
            eligible = [
                ls
                for ls in ranking[section_id]
                if ls.score >= tau and ls.leaf_id not in barred[section_id]
            ]
            provisional[section_id] = eligible[: k_of[section_id]]

        holders: dict[int, list[LeafScore]] = {}
        for section_id in order:
            for ls in provisional[section_id]:
                holders.setdefault(ls.leaf_id, []).append(ls)

        changed = False
        for leaf_id, claims in holders.items():
            if len(claims) < 2:
                continue
            winner = max(
                claims, key=lambda ls: (ls.score, -position[ls.section_id])
            )
            for ls in claims:
                if ls.section_id != winner.section_id:
                    barred[ls.section_id].add(leaf_id)
                    changed = True
        if not changed:
            break

    assignment = SectionAssignment()
    taken: set[int] = set()
    for section_id in order:
        entries = [
            AssignedLeaf(leaf_id=ls.leaf_id, cell_index=ls.cell_index, score=ls.score)
            for ls in provisional[section_id]
        ]
        assignment.sections[section_id] = entries
        taken.update(e.leaf_id for e in entries)

    all_leaves = sorted(
        {ls.leaf_id for section_id in order for ls in ranking[section_id]}
    )
    assignment.unassigned = [leaf for leaf in all_leaves if leaf not in taken]
    return assignment


def select_outputs(
    assignment: SectionAssignment,
    doc: NotebookDocument,
) -> dict[str, list[OutputArtifact]]:
    """Pick plot/table artifacts for each section from its assigned cells.

    Artifacts follow the owning leaf's score (descending, ties by cell
    index), capped at two per section.
    """
    selected: dict[str, list[OutputArtifact]] = {}
    for section_id, entries in assignment.sections.items():
        ordered = sorted(entries, key=lambda e: (-e.score, e.cell_index))
        artifacts: list[OutputArtifact] = []
        for entry in ordered:
            if entry.cell_index < 0 or entry.cell_index >= len(doc.cells):
                continue
            for artifact in doc.cells[entry.cell_index].outputs:
                if artifact.kind in ("image", "table"):
                    artifacts.append(artifact)
        selected[section_id] = artifacts[:MAX_ATTACHMENTS_PER_SECTION]
    return selected
