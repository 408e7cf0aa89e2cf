"""Notebook file parsing.

Reads the `.ipynb` JSON schema (nbformat major version 4) into a small
immutable document model: ordered cells plus classified output artifacts.
Execution state (counts, kernel metadata) is discarded; only source text
and display outputs survive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import MalformedNotebook, UnsupportedVersion

# Output types that can carry displayable payloads.
_DISPLAY_OUTPUT_TYPES = ("display_data", "execute_result")


@dataclass(frozen=True)
class OutputArtifact:
    """A single displayable output of a code cell.

    kind is derived from the mime type: image/* -> "image", text/html
    containing a table element -> "table", anything else -> "text".
    Image data stays base64-encoded exactly as stored in the file.
    """

    kind: str
    mime: str
    data: str
    cell_index: int


@dataclass(frozen=True)
class Cell:
    index: int
    kind: str  # "markdown" | "code"
    source: str
    outputs: tuple[OutputArtifact, ...] = ()


@dataclass(frozen=True)
class NotebookDocument:
    cells: tuple[Cell, ...]
    source_path: str = ""
    format_version: str = "4"

    def code_cells(self) -> list[Cell]:
        return [c for c in self.cells if c.kind == "code"]


def _join_source(source) -> str:
    """Normalize a source field (string or list of lines) to one string."""
    if isinstance(source, str):
        return source
    if isinstance(source, list):
        lines = []
        for piece in source:
            piece = piece if isinstance(piece, str) else str(piece)
            lines.append(piece[:-1] if piece.endswith("\n") else piece)
        return "\n".join(lines)
    return str(source)


def _classify(mime: str, data: str) -> str:
    if mime.startswith("image/"):
        return "image"
    if mime == "text/html" and "<table" in data.lower():
        return "table"
    return "text"


def _pick_mime(data: dict) -> str | None:
    """Choose the richest representation of one output bundle."""
    keys = list(data.keys())
    for key in keys:
        if key.startswith("image/"):
            return key
    if "text/html" in data:
        return "text/html"
    if "text/plain" in data:
        return "text/plain"
    return keys[0] if keys else None


def _outputs_for(raw_outputs, cell_index: int) -> tuple[OutputArtifact, ...]:
    artifacts = []
    for output in raw_outputs:
        if not isinstance(output, dict):
            continue
        if output.get("output_type") not in _DISPLAY_OUTPUT_TYPES:
            continue
        data = output.get("data")
        if not isinstance(data, dict):
            continue
        mime = _pick_mime(data)
        if mime is None:
            continue
        payload = _join_source(data[mime])
        artifacts.append(
            OutputArtifact(
                kind=_classify(mime, payload),
                mime=mime,
                data=payload,
                cell_index=cell_index,
            )
        )
    return tuple(artifacts)


def parse_notebook(raw: str, source_path: str = "") -> NotebookDocument:
    """Parse notebook file text into a NotebookDocument.

    Raises MalformedNotebook when the text is not JSON or has no cells
    list, and UnsupportedVersion when the nbformat major version is not 4.
    """
    try:
        obj = json.loads(raw)
    except (ValueError, TypeError) as exc:
        raise MalformedNotebook(f"not parseable as notebook JSON: {exc}") from exc
    if not isinstance(obj, dict) or not isinstance(obj.get("cells"), list):
        raise MalformedNotebook("top-level object lacks a cells list")
    major = obj.get("nbformat")
    if major != 4:
        raise UnsupportedVersion(f"nbformat major version {major!r}, expected 4")
    minor = obj.get("nbformat_minor", 0)

    cells = []
    for index, raw_cell in enumerate(obj["cells"]):
        if not isinstance(raw_cell, dict):
            raise MalformedNotebook(f"cell {index} is not an object")
        cell_type = raw_cell.get("cell_type", "markdown")
        source = _join_source(raw_cell.get("source", ""))
        if cell_type == "code":
            outputs = _outputs_for(raw_cell.get("outputs", []), index)
            cells.append(Cell(index=index, kind="code", source=source, outputs=outputs))
        else:
            # Raw cells (and anything unknown) are treated as markdown text.
            cells.append(Cell(index=index, kind="markdown", source=source))
    return NotebookDocument(
        cells=tuple(cells),
        source_path=source_path,
        format_version=f"{major}.{minor}",
    )


def parse_notebook_file(path) -> NotebookDocument:
    with open(path, encoding="utf-8") as handle:
        return parse_notebook(handle.read(), source_path=str(path))


def extract_outputs(cell: Cell) -> list[OutputArtifact]:
    """Displayable artifacts of a code cell, in output order."""
    if cell.kind != "code":
        return []
    return list(cell.outputs)
