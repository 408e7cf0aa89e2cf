"""Corpus evaluation against gold cell labels.

For every notebook in a corpus directory the harness generates a deck and
compares each generated bullet's source cell against a hand-written gold
label sidecar. A section "occurs" in a notebook when its slide comes out
non-empty; its error rate there is the fraction of bullets whose source
cell is labeled with a different section. The report mirrors the shape
section,occurrence,avg_error_rate as comma-separated text.

Gold sidecars are JSON files named after the notebook stem:
{"labels": {"<cell_index>": "<section_id>" | "none"}}.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .deck import DeckConfig, generate_deck
from .errors import MalformedNotebook, MissingGold, UnsupportedVersion
from .notebook import parse_notebook
from .templates import OutlineTemplate, template_for

logger = logging.getLogger(__name__)

REPORT_NOTE = (
    "# occurrence = notebooks where the section slide was generated non-empty; "
    "avg_error_rate = mean fraction of its bullets whose source cell carries a "
    "different gold label"
)


@dataclass(frozen=True)
class EvalRow:
    section_id: str
    occurrence: int
    avg_error_rate: float | None


@dataclass
class EvalReport:
    rows: list[EvalRow]
    corpus_size: int
    skipped: list[str] = field(default_factory=list)

    def to_csv(self) -> str:
        lines = [REPORT_NOTE, "section,occurrence,avg_error_rate"]
        for row in self.rows:
            rate = "" if row.avg_error_rate is None else f"{row.avg_error_rate:.6f}"
            lines.append(f"{row.section_id},{row.occurrence},{rate}")
        return "\n".join(lines) + "\n"


def load_gold(path) -> dict[int, str]:
    with open(path, encoding="utf-8") as handle:
        payload = json.load(handle)
    return {int(index): section for index, section in payload["labels"].items()}


def evaluate_corpus(
    corpus_dir,
    gold_dir,
    config: DeckConfig,
    template: OutlineTemplate | None = None,
) -> EvalReport:
    """Generate decks over a corpus and score bullet placement."""
    corpus_dir = Path(corpus_dir)
    gold_dir = Path(gold_dir)
    template = template or template_for(config.audience)
    notebooks = sorted(corpus_dir.glob("*.ipynb"))

    golds: dict[Path, dict[int, str]] = {}
    for nb_path in notebooks:
        gold_path = gold_dir / f"{nb_path.stem}.json"
        if not gold_path.exists():
            raise MissingGold(f"no gold file for {nb_path.name}")
        golds[nb_path] = load_gold(gold_path)

    occurrences: dict[str, int] = {s.id: 0 for s in template.auto_sections()}
    rates: dict[str, list[float]] = {s.id: [] for s in template.auto_sections()}
    skipped: list[str] = []
    evaluated = 0

    for nb_path in notebooks:
        try:
            doc = parse_notebook(nb_path.read_text(encoding="utf-8"), str(nb_path))
        except (MalformedNotebook, UnsupportedVersion) as exc:
            logger.warning("skipping %s: %s", nb_path.name, exc)
            skipped.append(nb_path.name)
            continue
        evaluated += 1
        deck = generate_deck(doc, config, template)
        gold = golds[nb_path]
        for slide in deck.slides:
            if slide.origin != "auto" or not slide.bullets:
                continue
            occurrences[slide.section_id] += 1
            wrong = 0
            for bullet in slide.bullets:
                cell_index = bullet.provenance[0][0]
                if gold.get(cell_index, "none") != slide.section_id:
                    wrong += 1
            rates[slide.section_id].append(wrong / len(slide.bullets))

    rows = []
    for spec in template.auto_sections():
        per_notebook = rates[spec.id]
        rows.append(
            EvalRow(
                section_id=spec.id,
                occurrence=occurrences[spec.id],
                avg_error_rate=(
                    sum(per_notebook) / len(per_notebook) if per_notebook else None
                ),
            )
        )
    return EvalReport(rows=rows, corpus_size=evaluated, skipped=skipped)
