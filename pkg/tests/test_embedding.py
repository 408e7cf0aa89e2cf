import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nbdeck.embedding import (
    EMBED_DIMENSION,
    EmbedderHandle,
    LexicalEmbedder,
    build_embedder,
    cosine,
    segment_sentences,
    tokenize,
)
from nbdeck.errors import DimensionMismatch


class TestSegmentSentences:
    def test_two_terminal_periods(self):
        out = segment_sentences("We clean data. Then we model.")
        assert [s.text for s in out] == ["We clean data.", "Then we model."]

    def test_protected_abbreviation(self):
        out = segment_sentences("See Fig. 2 for details.")
        assert len(out) == 1
        assert "Fig. 2" in out[0].text

    def test_empty_input(self):
        assert segment_sentences("") == []
        assert segment_sentences("   \n  ") == []

    def test_newlines_split(self):
        out = segment_sentences("first line\nsecond line")
        assert [s.text for s in out] == ["first line", "second line"]

    def test_markdown_syntax_stripped(self):
        out = segment_sentences("## **Data** `Cleaning`")
        assert out[0].text == "Data Cleaning"

    def test_list_markers_stripped_but_hyphens_kept(self):
        out = segment_sentences("- drop rows\n- run cross-validation")
        assert [s.text for s in out] == ["drop rows", "run cross-validation"]

    def test_origin_recorded(self):
        out = segment_sentences("model output", origin="query")
        assert out[0].origin == "query"

    def test_question_and_bang(self):
        out = segment_sentences("Why? Because! So there.")
        assert len(out) == 3


class TestTokenize:
    def test_camel_and_snake_equivalent(self):
        assert tokenize("trainModel") == tokenize("train_model") == ["train", "model"]

    def test_lowercases_and_keeps_digits(self):
        assert tokenize("Top10Features") == ["top", "10", "features"]

    def test_acronym_boundary(self):
        assert tokenize("HTTPServer") == ["http", "server"]


class TestBuiltinEmbedder:
    def test_deterministic(self):
        emb = LexicalEmbedder()
        a = emb.embed_text("data cleaning")
        b = emb.embed_text("data cleaning")
        assert np.array_equal(a, b)

    def test_empty_text_gives_zero_vector(self):
        emb = LexicalEmbedder()
        assert not emb.embed_text("").any()
        assert not emb.embed_text("!!!").any()

    def test_unit_norm(self):
        emb = LexicalEmbedder(["some corpus text", "more text"])
        vec = emb.embed_text("exploratory data analysis")
        assert abs(np.linalg.norm(vec) - 1.0) < 1e-6

    def test_bag_of_tokens_order_invariant(self):
        emb = LexicalEmbedder()
        a = emb.embed_text("exploratory data analysis")
        b = emb.embed_text("data analysis exploratory")
        assert cosine(a, b) == pytest.approx(1.0, abs=1e-9)

    def test_identifier_styles_match(self):
        emb = LexicalEmbedder()
        a = emb.embed_text("trainModel")
        b = emb.embed_text("train_model")
        assert cosine(a, b) == pytest.approx(1.0, abs=1e-9)

    def test_dimension(self):
        emb = LexicalEmbedder()
        assert emb.embed_text("hello").shape == (EMBED_DIMENSION,)

    def test_idf_downweights_common_tokens(self):
        # "data" appears in every corpus sentence, "outlier" in one.
        corpus = ["data loading", "data cleaning", "data outlier removal"]
        emb = LexicalEmbedder(corpus)
        rare = emb.embed_text("outlier")
        common = emb.embed_text("data")
        mixed = emb.embed_text("data outlier")
        assert cosine(mixed, rare) > cosine(mixed, common)

    @settings(max_examples=100, deadline=None)
    @given(st.text(max_size=60))
    def test_referentially_transparent_on_random_strings(self, text):
        emb = LexicalEmbedder(["background corpus"])
        assert np.array_equal(emb.embed_text(text), emb.embed_text(text))

    @settings(max_examples=60, deadline=None)
    @given(st.text(min_size=1, max_size=40), st.text(min_size=1, max_size=40))
    def test_cosine_symmetry_property(self, a, b):
        emb = LexicalEmbedder()
        va, vb = emb.embed_text(a), emb.embed_text(b)
        assert cosine(va, vb) == pytest.approx(cosine(vb, va), abs=1e-12)
        if va.any():
            assert cosine(va, va) == pytest.approx(1.0, abs=1e-6)


class TestCosine:
    def test_identical_unit_vectors(self):
        v = np.zeros(4)
        v[0] = 1.0
        assert cosine(v, v) == 1.0

    def test_orthogonal_basis(self):
        a, b = np.zeros(4), np.zeros(4)
        a[0], b[1] = 1.0, 1.0
        assert cosine(a, b) == 0.0

    def test_direct_dot_product(self):
        a = np.zeros(8)
        a[0], a[1] = 0.6, 0.8
        b = np.zeros(8)
        b[0] = 1.0
        assert cosine(a, b) == pytest.approx(0.6)

    def test_zero_vector_rule(self):
        assert cosine(np.zeros(4), np.ones(4)) == 0.0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            cosine(np.ones(4), np.ones(5))


class TestBuildEmbedder:
    def test_builtin_from_handle(self):
        emb = build_embedder(EmbedderHandle(), ["a", "b"])
        assert isinstance(emb, LexicalEmbedder)

    def test_remote_handle_builds_client(self):
        from nbdeck.embedding import RemoteEmbedder

        handle = EmbedderHandle(backend="remote", endpoint="http://localhost:1/x")
        assert isinstance(build_embedder(handle), RemoteEmbedder)

    def test_remote_failure_raises_remote_unavailable(self):
        from nbdeck.errors import RemoteUnavailable

        handle = EmbedderHandle(backend="remote", endpoint="http://127.0.0.1:1/none")
        client = build_embedder(handle)
        with pytest.raises(RemoteUnavailable):
            client.embed_batch(["hello"])
