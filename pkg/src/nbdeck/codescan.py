"""Lexical extraction of comments and identifiers from code cells.

Cell source language is not guaranteed, so everything here is a plain
lexical scan: no parsing, no imports resolution. Good enough to recover
comments, called function names and assignment targets for scoring and
summarization.
"""

from __future__ import annotations

import re
from collections import Counter

_CALL_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)\s*\(")
_RECEIVER_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)\s*\.\s*[A-Za-z_][A-Za-z0-9_]*\s*\(")
_ASSIGN_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=(?!=)")
_DEF_RE = re.compile(r"^\s*(?:async\s+)?(?:def|class)\s")

_KEYWORDS = frozenset(
    "if elif while for return def class with assert lambda except raise "
    "yield not and or in is del try else finally import from as pass "
    "global nonlocal await async".split()
)


def extract_comments(source: str) -> list[str]:
    """Full-line '#' comments plus a leading docstring, top to bottom."""
    comments: list[str] = []
    lines = source.split("\n")

    # Leading docstring: triple-quoted block before any code.
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx < len(lines):
        stripped = lines[idx].strip()
        for quote in ('"""', "'''"):
            if stripped.startswith(quote):
                body = stripped[len(quote):]
                if body.endswith(quote) and len(body) >= len(quote):
                    doc = body[: -len(quote)]
                    if doc.strip():
                        comments.append(doc.strip())
                else:
                    block = [body] if body.strip() else []
                    for line in lines[idx + 1:]:
                        if quote in line:
                            head = line.split(quote, 1)[0]
                            if head.strip():
                                block.append(head.strip())
                            break
                        if line.strip():
                            block.append(line.strip())
                    comments.extend(block)
                break

    for line in lines:
        stripped = line.strip()
        if stripped.startswith("#"):
            text = stripped.lstrip("#").strip()
            if text:
                comments.append(text)
    return comments


def called_names(source: str) -> list[str]:
    """Called function/method names ordered by frequency, then first use."""
    counts: Counter[str] = Counter()
    first_seen: dict[str, int] = {}
    position = 0
    for line in source.split("\n"):
        if _DEF_RE.match(line) or line.strip().startswith("#"):
            continue
        for match in _CALL_RE.finditer(line):
            name = match.group(1)
            if name in _KEYWORDS:
                continue
            counts[name] += 1
            first_seen.setdefault(name, position)
            position += 1
    return sorted(counts, key=lambda n: (-counts[n], first_seen[n]))


def subject_names(source: str) -> list[str]:
    """Method receivers and assignment targets, most frequent first."""
    counts: Counter[str] = Counter()
    first_seen: dict[str, int] = {}
    position = 0
    for line in source.split("\n"):
        if line.strip().startswith("#"):
            continue
        for match in _RECEIVER_RE.finditer(line):
            name = match.group(1)
            if name not in _KEYWORDS:
                counts[name] += 1
                first_seen.setdefault(name, position)
                position += 1
        m = _ASSIGN_RE.match(line)
        if m and m.group(1) not in _KEYWORDS:
            counts[m.group(1)] += 1
            first_seen.setdefault(m.group(1), position)
            position += 1
    return sorted(counts, key=lambda n: (-counts[n], first_seen[n]))


def identifier_sentence(source: str) -> str:
    """One synthetic sentence of called names for lexical scoring."""
    names = called_names(source)
    return " ".join(names)
