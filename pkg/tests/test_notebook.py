import json

import pytest

from nbdeck.errors import MalformedNotebook, UnsupportedVersion
from nbdeck.notebook import extract_outputs, parse_notebook

from .conftest import html_output, image_output, make_doc, notebook_json, text_output


class TestParseNotebook:
    def test_preserves_cell_order_and_indices(self):
        doc = make_doc(
            [("markdown", "# Intro"), ("code", "x = 1"), ("markdown", "done")]
        )
        assert [c.kind for c in doc.cells] == ["markdown", "code", "markdown"]
        assert [c.index for c in doc.cells] == [0, 1, 2]

    def test_multiline_source_joined_with_newline(self):
        doc = make_doc([("code", ["a = 1\n", "b = 2\n", "c = a + b"])])
        assert doc.cells[0].source == "a = 1\nb = 2\nc = a + b"

    def test_string_source_kept_verbatim(self):
        doc = make_doc([("markdown", "line one\nline two")])
        assert doc.cells[0].source == "line one\nline two"

    def test_missing_cells_list_is_malformed(self):
        with pytest.raises(MalformedNotebook):
            parse_notebook(json.dumps({"metadata": {}, "nbformat": 4}))

    def test_garbage_text_is_malformed(self):
        with pytest.raises(MalformedNotebook):
            parse_notebook("this is not json {")

    def test_non_v4_is_unsupported(self):
        with pytest.raises(UnsupportedVersion):
            parse_notebook(notebook_json([("code", "x = 1")], nbformat=3))

    def test_format_version_recorded(self):
        doc = make_doc([("code", "x = 1")])
        assert doc.format_version == "4.5"

    def test_raw_cells_become_markdown(self):
        raw = json.loads(notebook_json([("markdown", "later")]))
        raw["cells"].insert(
            0, {"cell_type": "raw", "metadata": {}, "source": "raw text"}
        )
        doc = parse_notebook(json.dumps(raw))
        assert doc.cells[0].kind == "markdown"
        assert doc.cells[0].source == "raw text"

    def test_markdown_cells_never_carry_outputs(self):
        doc = make_doc([("markdown", "# Intro"), ("code", "x", [image_output()])])
        assert doc.cells[0].outputs == ()
        assert len(doc.cells[1].outputs) == 1

    def test_execution_counts_discarded(self):
        doc = make_doc([("code", "x = 1", [text_output()])])
        assert not hasattr(doc.cells[0], "execution_count")


class TestOutputClassification:
    def test_image_png_classified_as_image(self):
        doc = make_doc([("code", "plot()", [image_output()])])
        arts = extract_outputs(doc.cells[0])
        assert [a.kind for a in arts] == ["image"]
        assert arts[0].mime == "image/png"
        assert arts[0].cell_index == 0

    def test_no_outputs_gives_empty_list(self):
        doc = make_doc([("code", "x = 1")])
        assert extract_outputs(doc.cells[0]) == []

    def test_html_with_table_classified_as_table(self):
        doc = make_doc([("code", "df.head()", [html_output()])])
        arts = extract_outputs(doc.cells[0])
        assert [a.kind for a in arts] == ["table"]

    def test_html_without_table_is_text(self):
        doc = make_doc([("code", "x", [html_output("<p>hello</p>")])])
        assert extract_outputs(doc.cells[0])[0].kind == "text"

    def test_plain_text_output_is_text(self):
        doc = make_doc([("code", "x", [text_output()])])
        assert extract_outputs(doc.cells[0])[0].kind == "text"

    def test_stream_outputs_skipped(self):
        stream = {"output_type": "stream", "name": "stdout", "text": "hi\n"}
        doc = make_doc([("code", "print('hi')", [stream])])
        assert extract_outputs(doc.cells[0]) == []

    def test_output_order_preserved(self):
        doc = make_doc(
            [("code", "x", [text_output("first"), image_output(), html_output()])]
        )
        kinds = [a.kind for a in extract_outputs(doc.cells[0])]
        assert kinds == ["text", "image", "table"]

    def test_image_data_kept_verbatim(self):
        payload = "AAAA\nBBBB\n"
        doc = make_doc([("code", "x", [image_output(payload)])])
        assert extract_outputs(doc.cells[0])[0].data == payload

    def test_richest_mime_wins_within_one_output(self):
        bundle = {
            "output_type": "execute_result",
            "data": {"text/plain": "<Figure>", "image/png": "AAAA"},
            "metadata": {},
            "execution_count": 2,
        }
        doc = make_doc([("code", "plot()", [bundle])])
        arts = extract_outputs(doc.cells[0])
        assert len(arts) == 1
        assert arts[0].mime == "image/png"


def test_index_map_is_identity_on_many_shapes():
    shapes = [
        [],
        [("markdown", "just text")],
        [("code", "")],
        [("markdown", "# A"), ("code", "x"), ("code", "y"), ("markdown", "end")],
    ]
    for cells in shapes:
        doc = make_doc(cells)
        assert [c.index for c in doc.cells] == list(range(len(cells)))
