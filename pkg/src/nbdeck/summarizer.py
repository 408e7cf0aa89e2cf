"""Bullet text generation for assigned code cells.

The built-in summarizer is rule based and deterministic: prefer the
cell's first comment or docstring line, fall back to the nearest markdown
context sentence, then synthesize a "Calls f, g on x" clause from the
cell's identifiers. Whatever the rule produced is then padded with the
remaining evidence until the minimum token count for the configured level
of detail is met, or marked short when the evidence runs out.

A remote model can replace the heuristic through the same handle; its
output is padded by the same rule so the length contract holds either way.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codescan import called_names, extract_comments, subject_names
from .errors import EmptyEvidence, RemoteUnavailable
from .tree import MarkdownContext

MIN_TOKENS_BY_DETAIL = {1: 4, 2: 8, 3: 12}


@dataclass(frozen=True)
class SummaryRequest:
    source: str
    comments: tuple[str, ...]
    context: MarkdownContext
    min_tokens: int


@dataclass(frozen=True)
class SummarizerHandle:
    backend: str = "builtin_heuristic"  # or "remote"
    endpoint: str | None = None


@dataclass(frozen=True)
class Summary:
    text: str
    short: bool = False


def request_for(source: str, context: MarkdownContext, min_tokens: int) -> SummaryRequest:
    return SummaryRequest(
        source=source,
        comments=tuple(extract_comments(source)),
        context=context,
        min_tokens=min_tokens,
    )


def _sentence_case(text: str) -> str:
    for i, ch in enumerate(text):
        if ch.isalpha():
            return text[:i] + ch.upper() + text[i + 1:]
    return text


def _tidy(text: str) -> str:
    return _sentence_case(text.strip().rstrip(".").strip())


def _token_count(text: str) -> int:
    return len(text.split())


def _called_clause(source: str) -> str:
    names = called_names(source)
    if not names:
        return ""
    clause = "calls " + ", ".join(names[:3])
    subjects = subject_names(source)
    if subjects:
        clause += f" on {subjects[0]}"
    return clause


def _first_source_line(source: str) -> str:
    for line in source.split("\n"):
        if line.strip():
            return line.strip()
    return ""


def _evidence_fragments(req: SummaryRequest) -> list[str]:
    """All evidence the builtin may draw on, in priority order."""
    fragments = list(req.comments)
    fragments.extend(req.context.all_texts())
    clause = _called_clause(req.source)
    if clause:
        fragments.append(clause)
    return fragments


def enforce_min_length(text: str, min_tokens: int, req: SummaryRequest) -> Summary:
    """Pad a bullet with the next-priority evidence until long enough.

    Fragments already present in the text are skipped; when evidence is
    exhausted below the target the bullet is returned as-is with
    short=True.
    """
    if _token_count(text) >= min_tokens:
        return Summary(text=text, short=False)
    used = {text.strip().lower()}
    for fragment in _evidence_fragments(req):
        key = fragment.strip().rstrip(".").lower()
        if not key or key in used or key in text.lower():
            continue
        text = f"{text}, {fragment.strip().rstrip('.')}"
        used.add(key)
        if _token_count(text) >= min_tokens:
            return Summary(text=text, short=False)
    return Summary(text=text, short=True)


class BuiltinSummarizer:
    def summarize(self, req: SummaryRequest) -> Summary:
        context_texts = req.context.all_texts()
        if not req.source.strip() and not req.comments and not context_texts:
            raise EmptyEvidence("no source, comments, or context to summarize")
        if req.comments:
            base = _tidy(req.comments[0])
        elif context_texts:
            base = _tidy(context_texts[0])
        else:
            clause = _called_clause(req.source)
            base = _tidy(clause) if clause else _tidy(_first_source_line(req.source))
        if not base:
            raise EmptyEvidence("evidence present but empty after cleanup")
        return enforce_min_length(base, req.min_tokens, req)

    def summarize_batch(self, requests: list[SummaryRequest]) -> list[Summary]:
        return [self.summarize(r) for r in requests]


class RemoteSummarizer:
    """Client for a remote code-summarization endpoint.

    Wire contract: POST {"snippets": [{"code": ..., "doc": ...,
    "min_tokens": ...}, ...]} returns {"summaries": [...]}.
    """

    def __init__(self, endpoint: str, timeout: float = 60.0):
        self.endpoint = endpoint
        self.timeout = timeout

    def summarize_batch(self, requests: list[SummaryRequest]) -> list[Summary]:
        import httpx

        snippets = [
            {
                "code": r.source,
                "doc": "\n".join(list(r.comments) + r.context.all_texts()),
                "min_tokens": r.min_tokens,
            }
            for r in requests
        ]
        try:
            response = httpx.post(
                self.endpoint, json={"snippets": snippets}, timeout=self.timeout
            )
            response.raise_for_status()
            payload = response.json()
        except Exception as exc:
            raise RemoteUnavailable(f"summarization endpoint failed: {exc}") from exc
        summaries = payload.get("summaries")
        if not isinstance(summaries, list) or len(summaries) != len(requests):
            raise RemoteUnavailable("summarization endpoint returned a malformed batch")
        out = []
        for text, req in zip(summaries, requests):
            base = _tidy(str(text))
            if not base:
                raise RemoteUnavailable("summarization endpoint returned empty text")
            out.append(enforce_min_length(base, req.min_tokens, req))
        return out

    def summarize(self, req: SummaryRequest) -> Summary:
        return self.summarize_batch([req])[0]


def build_summarizer(handle: SummarizerHandle):
    if handle.backend == "remote":
        if not handle.endpoint:
            raise RemoteUnavailable("remote summarizer handle has no endpoint")
        return RemoteSummarizer(handle.endpoint)
    return BuiltinSummarizer()


def summarize_cell(summarizer, req: SummaryRequest) -> Summary:
    return summarizer.summarize(req)
