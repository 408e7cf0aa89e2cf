"""Hierarchical tree over notebook cells.

Markdown headings define the hierarchy: a heading nests under the nearest
preceding heading of strictly smaller level, prose attaches to its
immediate heading, and code cells are always leaves under the nearest
preceding heading or prose scope. When a notebook has no single leading
top-level heading, a fake root holds the forest together.

Markdown cells containing several headings are split into one node per
heading with the intervening prose as text nodes, so real-world notebooks
that pack a whole section into one cell still produce a sensible tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .embedding import segment_sentences
from .errors import NotALeaf
from .notebook import NotebookDocument

_ATX_RE = re.compile(r"^(#{1,6})(?:\s+(.*?))?\s*$")
_SETEXT_H1_RE = re.compile(r"^=+\s*$")
_SETEXT_H2_RE = re.compile(r"^-{2,}\s*$")
_FENCE_RE = re.compile(r"^(```|~~~)")


@dataclass
class TreeNode:
    id: int
    kind: str  # "fake_root" | "header" | "text" | "code"
    header_level: int = 0
    source_cell: int | None = None
    text: str = ""
    parent: int | None = None
    children: list[int] = field(default_factory=list)


@dataclass
class NotebookTree:
    nodes: list[TreeNode]  # node id == list position
    root_id: int

    def node(self, node_id: int) -> TreeNode:
        return self.nodes[node_id]

    @property
    def root(self) -> TreeNode:
        return self.nodes[self.root_id]

    def code_leaves(self) -> list[TreeNode]:
        """Code leaf nodes in cell order."""
        leaves = [n for n in self.nodes if n.kind == "code"]
        leaves.sort(key=lambda n: n.source_cell if n.source_cell is not None else -1)
        return leaves

    def ancestors(self, node_id: int) -> list[TreeNode]:
        """Proper ancestors from nearest to root, fake root excluded."""
        out = []
        current = self.node(node_id).parent
        while current is not None:
            node = self.node(current)
            if node.kind != "fake_root":
                out.append(node)
            current = node.parent
        return out

    def to_dict(self) -> dict:
        return {
            "root_id": self.root_id,
            "nodes": [
                {
                    "id": n.id,
                    "kind": n.kind,
                    "header_level": n.header_level,
                    "source_cell": n.source_cell,
                    "text": n.text,
                    "parent": n.parent,
                    "children": list(n.children),
                }
                for n in self.nodes
            ],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "NotebookTree":
        nodes = [
            TreeNode(
                id=entry["id"],
                kind=entry["kind"],
                header_level=entry.get("header_level", 0),
                source_cell=entry.get("source_cell"),
                text=entry.get("text", ""),
                parent=entry.get("parent"),
                children=list(entry.get("children", [])),
            )
            for entry in payload["nodes"]
        ]
        return cls(nodes=nodes, root_id=payload["root_id"])


@dataclass(frozen=True)
class ContextEntry:
    texts: tuple[str, ...]
    depth: int


@dataclass(frozen=True)
class MarkdownContext:
    """Markdown ancestry of a code leaf, nearest entry first.

    depth counts the heading levels strictly between the leaf and the
    entry, so a leaf's own heading (and any prose right above the leaf)
    sits at depth 0 and outer section headings at 1, 2, ...
    """

    entries: tuple[ContextEntry, ...] = ()

    def all_texts(self) -> list[str]:
        out = []
        for entry in self.entries:
            out.extend(entry.texts)
        return out


def segment_markdown(source: str) -> list[tuple[str, int, str]]:
    """Split markdown source into (kind, level, text) blocks.

    kind is "header" or "text"; level is the heading level for headers and
    0 for text blocks. Setext underlines are normalized to ATX levels.
    Fenced code blocks are kept verbatim inside text blocks.
    """
    blocks: list[tuple[str, int, str]] = []
    prose: list[str] = []
    in_fence = False

    def flush_prose():
        text = "\n".join(prose).strip("\n")
        if text.strip():
            blocks.append(("text", 0, text))
        prose.clear()

    for line in source.split("\n"):
        if _FENCE_RE.match(line.strip()):
            in_fence = not in_fence
            prose.append(line)
            continue
        if in_fence:
            prose.append(line)
            continue
        m = _ATX_RE.match(line)
        if m:
            flush_prose()
            title = re.sub(r"\s+#+\s*$", "", m.group(2) or "").strip()
            blocks.append(("header", len(m.group(1)), title))
            continue
        # Setext underline promotes the last prose line to a heading.
        if prose and prose[-1].strip():
            if _SETEXT_H1_RE.match(line) or _SETEXT_H2_RE.match(line):
                level = 1 if _SETEXT_H1_RE.match(line) else 2
                title = prose.pop().strip()
                flush_prose()
                blocks.append(("header", level, title))
                continue
        prose.append(line)
    flush_prose()
    return blocks


def _cell_blocks(doc: NotebookDocument) -> list[tuple[int, str, int, str]]:
    """Flatten the document into (cell_index, kind, level, text) blocks."""
    flat = []
    for cell in doc.cells:
        if cell.kind == "code":
            flat.append((cell.index, "code", 0, cell.source))
        else:
            blocks = segment_markdown(cell.source)
            if not blocks:
                # Preserve coverage: an empty markdown cell still gets a node.
                blocks = [("text", 0, "")]
            for kind, level, text in blocks:
                flat.append((cell.index, kind, level, text))
    return flat


def build_tree(doc: NotebookDocument) -> NotebookTree:
    """Build the heading hierarchy over a parsed notebook.

    A single top-level heading that opens the notebook becomes the root;
    otherwise a fake root adopts everything at the top level.
    """
    flat = _cell_blocks(doc)

    header_levels = [level for _, kind, level, _ in flat if kind == "header"]
    single_root = False
    if header_levels:
        top = min(header_levels)
        at_top = sum(1 for lvl in header_levels if lvl == top)
        # Root promotion only works when nothing precedes the top heading.
        single_root = at_top == 1 and flat[0][1] == "header" and flat[0][2] == top

    nodes: list[TreeNode] = []

    def new_node(kind, level, cell, text, parent):
        node = TreeNode(
            id=len(nodes),
            kind=kind,
            header_level=level,
            source_cell=cell,
            text=text,
            parent=parent,
        )
        nodes.append(node)
        if parent is not None:
            nodes[parent].children.append(node.id)
        return node

    if single_root:
        cell, _, level, text = flat[0]
        root = new_node("header", level, cell, text, None)
        flat = flat[1:]
        header_stack = [(root.id, level)]
    else:
        root = new_node("fake_root", 0, None, "", None)
        header_stack = []

    text_scope: int | None = None

    for cell, kind, level, text in flat:
        if kind == "header":
            while header_stack and header_stack[-1][1] >= level:
                header_stack.pop()
            parent = header_stack[-1][0] if header_stack else root.id
            node = new_node("header", level, cell, text, parent)
            header_stack.append((node.id, level))
            text_scope = None
        elif kind == "text":
            parent = header_stack[-1][0] if header_stack else root.id
            node = new_node("text", 0, cell, text, parent)
            text_scope = node.id
        else:  # code leaf
            if text_scope is not None:
                parent = text_scope
            elif header_stack:
                parent = header_stack[-1][0]
            else:
                parent = root.id
            new_node("code", 0, cell, text, parent)

    return NotebookTree(nodes=nodes, root_id=root.id)


def leaf_context(tree: NotebookTree, leaf_id: int) -> MarkdownContext:
    """Markdown ancestry of a code leaf, nearest-first with heading depth."""
    leaf = tree.node(leaf_id)
    if leaf.kind != "code":
        raise NotALeaf(f"node {leaf_id} has kind {leaf.kind!r}, expected code")
    entries = []
    depth = 0
    for ancestor in tree.ancestors(leaf_id):
        texts = tuple(s.text for s in segment_sentences(ancestor.text))
        entries.append(ContextEntry(texts=texts, depth=depth))
        if ancestor.kind == "header":
            depth += 1
    return MarkdownContext(entries=tuple(entries))
