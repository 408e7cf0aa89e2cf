import json

from click.testing import CliRunner

from nbdeck.cli import main

from .conftest import FIXTURES, WINE_NOTEBOOK, notebook_json


class TestGenerate:
    def test_json_output(self, tmp_path):
        out = tmp_path / "deck.json"
        result = CliRunner().invoke(
            main,
            ["generate", "--notebook", str(WINE_NOTEBOOK), "--audience",
             "technical", "--detail", "2", "--title", "Wine", "--presenter",
             "Me", "--out", str(out)],
        )
        assert result.exit_code == 0, result.output
        payload = json.loads(out.read_text())
        assert len(payload["slides"]) == 18

    def test_html_output(self, tmp_path):
        out = tmp_path / "deck.html"
        result = CliRunner().invoke(
            main,
            ["generate", "--notebook", str(WINE_NOTEBOOK), "--format", "html",
             "--out", str(out)],
        )
        assert result.exit_code == 0, result.output
        assert out.read_text().startswith("<!DOCTYPE html>")

    def test_md_output(self, tmp_path):
        out = tmp_path / "deck.md"
        result = CliRunner().invoke(
            main,
            ["generate", "--notebook", str(WINE_NOTEBOOK), "--format", "md",
             "--out", str(out)],
        )
        assert result.exit_code == 0
        assert out.read_text().count("\n---\n") == 17

    def test_template_override(self, tmp_path):
        template = {
            "audience": "technical",
            "version": "1",
            "sections": [
                {"id": "only", "title": "Only Section", "parent_section": "G",
                 "mode": "auto", "k": 2, "query": "wine quality model"},
            ],
        }
        tpl = tmp_path / "tpl.json"
        tpl.write_text(json.dumps(template))
        out = tmp_path / "deck.json"
        result = CliRunner().invoke(
            main,
            ["generate", "--notebook", str(WINE_NOTEBOOK), "--template",
             str(tpl), "--out", str(out)],
        )
        assert result.exit_code == 0, result.output
        payload = json.loads(out.read_text())
        assert [s["id"] for s in payload["slides"]] == ["title", "only"]

    def test_bad_notebook_fails_cleanly(self, tmp_path):
        bad = tmp_path / "bad.ipynb"
        bad.write_text("{nope")
        result = CliRunner().invoke(
            main, ["generate", "--notebook", str(bad), "--out", str(tmp_path / "x")]
        )
        assert result.exit_code != 0
        assert "Error" in result.output

    def test_nbformat3_fails_cleanly(self, tmp_path):
        old = tmp_path / "old.ipynb"
        old.write_text(notebook_json([("code", "x")], nbformat=3))
        result = CliRunner().invoke(
            main, ["generate", "--notebook", str(old), "--out", str(tmp_path / "x")]
        )
        assert result.exit_code != 0


class TestEval:
    def test_eval_writes_report(self, tmp_path):
        out = tmp_path / "report.csv"
        result = CliRunner().invoke(
            main,
            ["eval", "--corpus", str(FIXTURES / "eval3" / "corpus"),
             "--gold", str(FIXTURES / "eval3" / "gold"), "--out", str(out)],
        )
        assert result.exit_code == 0, result.output
        lines = out.read_text().strip().split("\n")
        assert lines[1] == "section,occurrence,avg_error_rate"
        assert "evaluated 3 notebooks" in result.output

    def test_eval_missing_gold_errors(self, tmp_path):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        (corpus / "n.ipynb").write_text(notebook_json([("code", "x")]))
        gold = tmp_path / "gold"
        gold.mkdir()
        result = CliRunner().invoke(
            main,
            ["eval", "--corpus", str(corpus), "--gold", str(gold),
             "--out", str(tmp_path / "r.csv")],
        )
        assert result.exit_code != 0


def test_env_var_overrides_backend(monkeypatch):
    from nbdeck.backends import resolve_embedder, resolve_summarizer

    monkeypatch.setenv("NBDECK_EMBEDDER_URL", "http://models:9000/embed")
    monkeypatch.setenv("NBDECK_SUMMARIZER_URL", "http://models:9000/sum")
    emb = resolve_embedder("builtin")
    summ = resolve_summarizer("builtin")
    assert emb.backend == "remote" and emb.endpoint == "http://models:9000/embed"
    assert summ.backend == "remote" and summ.endpoint == "http://models:9000/sum"

    monkeypatch.delenv("NBDECK_EMBEDDER_URL")
    monkeypatch.delenv("NBDECK_SUMMARIZER_URL")
    assert resolve_embedder("builtin").backend == "builtin_lexical"
    assert resolve_embedder("http://x/y").endpoint == "http://x/y"
