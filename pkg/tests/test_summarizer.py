import pytest

from nbdeck.codescan import called_names, extract_comments, subject_names
from nbdeck.errors import EmptyEvidence
from nbdeck.summarizer import (
    MIN_TOKENS_BY_DETAIL,
    BuiltinSummarizer,
    SummarizerHandle,
    SummaryRequest,
    build_summarizer,
    enforce_min_length,
    request_for,
    summarize_cell,
)
from nbdeck.tree import ContextEntry, MarkdownContext


def req(source="", comments=(), context_texts=(), min_tokens=1, depth=0):
    ctx = MarkdownContext(
        entries=(ContextEntry(texts=tuple(context_texts), depth=depth),)
        if context_texts
        else ()
    )
    return SummaryRequest(
        source=source,
        comments=tuple(comments),
        context=ctx,
        min_tokens=min_tokens,
    )


class TestCodescan:
    def test_full_line_comments(self):
        out = extract_comments("# load data\nx = 1\n  # trim rows\n")
        assert out == ["load data", "trim rows"]

    def test_leading_docstring_captured(self):
        out = extract_comments('"""Fit the model.\nSecond line."""\nfit()')
        assert out[0] == "Fit the model."

    def test_called_names_frequency_then_first_use(self):
        out = called_names("b()\na()\na()\nplot(a(1))")
        assert out[0] == "a"
        assert set(out) == {"a", "b", "plot"}

    def test_keywords_and_defs_excluded(self):
        out = called_names("def helper(x):\n    if check(x):\n        return go(x)")
        assert "def" not in out and "if" not in out and "helper" not in out
        assert out == ["check", "go"]

    def test_subject_names_receivers_and_assignments(self):
        out = subject_names("model = RF()\nmodel.fit(x)\nmodel.predict(x)")
        assert out[0] == "model"

    def test_comparison_not_an_assignment(self):
        assert "x" not in subject_names("x == 1")


class TestSummarizeCell:
    def setup_method(self):
        self.summarizer = BuiltinSummarizer()

    def test_leading_comment_wins(self):
        r = req(
            source="# compute the F1 score of a model\nf1_score(y, y_hat)",
            comments=extract_comments("# compute the F1 score of a model\nf1()"),
        )
        out = summarize_cell(self.summarizer, r)
        assert out.text == "Compute the F1 score of a model"

    def test_context_fallback_when_no_comments(self):
        r = req(source="df.dropna()", context_texts=("Data Cleaning",))
        out = summarize_cell(self.summarizer, r)
        assert out.text.startswith("Data Cleaning")

    def test_synthesized_calls_clause(self):
        r = req(source="model.fit(x_train)\nmodel.predict(x_test)")
        out = summarize_cell(self.summarizer, r)
        assert out.text == "Calls fit, predict on model"

    def test_empty_everything_raises(self):
        with pytest.raises(EmptyEvidence):
            summarize_cell(self.summarizer, req(source="   "))

    def test_no_trailing_period_and_sentence_case(self):
        r = req(source="# plot it.\nplot()")
        out = summarize_cell(self.summarizer, req(comments=("plot it.",), source="plot()"))
        assert out.text == "Plot it"

    def test_deterministic(self):
        r = req(
            source="# analyze\nanalyze(df)",
            comments=("analyze",),
            context_texts=("Analysis section",),
            min_tokens=8,
        )
        a = summarize_cell(self.summarizer, r)
        b = summarize_cell(self.summarizer, r)
        assert a == b

    def test_output_built_only_from_request_evidence(self):
        sentinel = "xylophone_zebra_42"
        r = req(
            source="# clean rows\nclean(df)",
            comments=("clean rows",),
            context_texts=("Cleaning the dataset of rows",),
            min_tokens=12,
        )
        out = summarize_cell(self.summarizer, r)
        assert sentinel not in out.text


class TestEnforceMinLength:
    def test_already_long_enough_unchanged(self):
        r = req(source="fit()")
        out = enforce_min_length("Fit the model", 3, r)
        assert out.text == "Fit the model" and not out.short

    def test_appends_context_fragment(self):
        r = req(source="", context_texts=("correlation matrix of features",))
        out = enforce_min_length("Heatmap", 4, r)
        assert out.text == "Heatmap, correlation matrix of features"
        assert not out.short

    def test_exhausted_evidence_marks_short(self):
        r = req(source="")
        out = enforce_min_length("Plot", 8, r)
        assert out.text == "Plot" and out.short

    def test_priority_comment_then_context_then_calls(self):
        r = req(
            source="scale(df)",
            comments=("first comment", "second comment"),
            context_texts=("context sentence here",),
        )
        out = enforce_min_length("Short", 20, r)
        assert out.text.index("second comment") < out.text.index("context sentence")
        assert out.text.index("context sentence") < out.text.index("calls scale")

    def test_fragment_already_present_skipped(self):
        r = req(source="", comments=("Heatmap",), context_texts=("extra words here",))
        out = enforce_min_length("Heatmap", 4, r)
        assert out.text.count("Heatmap") == 1


class TestLengthContract:
    @pytest.mark.parametrize("detail,expected", [(1, 4), (2, 8), (3, 12)])
    def test_detail_levels(self, detail, expected):
        assert MIN_TOKENS_BY_DETAIL[detail] == expected

    def test_non_short_bullets_meet_minimum(self):
        summarizer = BuiltinSummarizer()
        cases = [
            req(source="# tiny\nf()", comments=("tiny",), min_tokens=8),
            req(
                source="x.fit(y)",
                context_texts=("some context words for padding",),
                min_tokens=8,
            ),
            req(source="do_thing(a, b)", min_tokens=4),
        ]
        for case in cases:
            out = summarizer.summarize(case)
            if not out.short:
                assert len(out.text.split()) >= case.min_tokens


class TestRequestFor:
    def test_builds_comments_from_source(self):
        ctx = MarkdownContext()
        r = request_for("# top note\nx = 1", ctx, 4)
        assert r.comments == ("top note",)
        assert r.min_tokens == 4


def test_build_summarizer_backends():
    from nbdeck.summarizer import RemoteSummarizer

    assert isinstance(build_summarizer(SummarizerHandle()), BuiltinSummarizer)
    remote = build_summarizer(
        SummarizerHandle(backend="remote", endpoint="http://127.0.0.1:1/x")
    )
    assert isinstance(remote, RemoteSummarizer)


def test_remote_summarizer_failure():
    from nbdeck.errors import RemoteUnavailable
    from nbdeck.summarizer import RemoteSummarizer

    client = RemoteSummarizer("http://127.0.0.1:1/none")
    with pytest.raises(RemoteUnavailable):
        client.summarize(req(source="x()", min_tokens=4))
