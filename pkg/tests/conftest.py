from __future__ import annotations

import json
from pathlib import Path

import pytest

from nbdeck.notebook import parse_notebook

REPO_ROOT = Path(__file__).resolve().parents[1]
CORPUS_DIR = REPO_ROOT / "notebooks" / "corpus"
WINE_NOTEBOOK = REPO_ROOT / "notebooks" / "wine_quality.ipynb"
FIXTURES = Path(__file__).resolve().parent / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"

_acceptance_results: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance_results.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for name, outcome in _acceptance_results:
        terminalreporter.write_line(f"  {'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


def notebook_json(cells, nbformat=4, nbformat_minor=5) -> str:
    """Build .ipynb text from (kind, source[, outputs]) triples."""
    raw_cells = []
    for cell in cells:
        kind, source = cell[0], cell[1]
        outputs = cell[2] if len(cell) > 2 else []
        entry = {
            "cell_type": kind,
            "metadata": {},
            "source": source,
        }
        if kind == "code":
            entry["outputs"] = outputs
            entry["execution_count"] = None
        raw_cells.append(entry)
    return json.dumps(
        {
            "cells": raw_cells,
            "metadata": {},
            "nbformat": nbformat,
            "nbformat_minor": nbformat_minor,
        }
    )


def make_doc(cells):
    return parse_notebook(notebook_json(cells))


def image_output(data="iVBORw0KGgoAAAANSUhEUg==", mime="image/png"):
    return {
        "output_type": "display_data",
        "data": {mime: data},
        "metadata": {},
    }


def html_output(html="<table><tr><td>1</td></tr></table>"):
    return {
        "output_type": "execute_result",
        "data": {"text/html": html},
        "metadata": {},
        "execution_count": 1,
    }


def text_output(text="42"):
    return {
        "output_type": "execute_result",
        "data": {"text/plain": text},
        "metadata": {},
        "execution_count": 1,
    }


@pytest.fixture(scope="session")
def wine_doc():
    from nbdeck.notebook import parse_notebook_file

    return parse_notebook_file(WINE_NOTEBOOK)
