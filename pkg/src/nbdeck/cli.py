"""Command line interface: generate decks, serve the API, run evaluation."""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .backends import resolve_embedder, resolve_summarizer
from .deck import DeckConfig, generate_deck
from .errors import NbdeckError
from .evalharness import evaluate_corpus
from .export import export_deck
from .notebook import parse_notebook_file
from .templates import load_template

_CLI_FORMATS = {"json": "canonical_json", "md": "markdown", "html": "html_slideshow"}


@click.group()
def main():
    """Turn Jupyter notebooks into audience-conditioned slide decks."""


def _config(audience, detail, title, presenter, embedder, summarizer) -> DeckConfig:
    return DeckConfig(
        title=title,
        presenter=presenter,
        audience=audience,
        detail=detail,
        embedder=resolve_embedder(embedder),
        summarizer=resolve_summarizer(summarizer),
    )


@main.command()
@click.option("--notebook", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--audience", type=click.Choice(["technical", "nontechnical"]),
              default="technical", show_default=True)
@click.option("--detail", type=click.IntRange(1, 3), default=2, show_default=True)
@click.option("--title", default="", help="Presentation title for the title page.")
@click.option("--presenter", default="", help="Presenter name for the title page.")
@click.option("--format", "fmt", type=click.Choice(sorted(_CLI_FORMATS)),
              default="json", show_default=True)
@click.option("--template", "template_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Template override file (JSON).")
@click.option("--embedder", default="builtin", show_default=True,
              help="'builtin' or a remote embedding endpoint URL.")
@click.option("--summarizer", default="builtin", show_default=True,
              help="'builtin' or a remote summarization endpoint URL.")
@click.option("--out", required=True, type=click.Path(dir_okay=False))
def generate(notebook, audience, detail, title, presenter, fmt, template_path,
             embedder, summarizer, out):
    """Generate a slide deck from a notebook file."""
    try:
        doc = parse_notebook_file(notebook)
        template = load_template(template_path) if template_path else None
        config = _config(audience, detail, title or Path(notebook).stem,
                         presenter, embedder, summarizer)
        deck = generate_deck(doc, config, template)
        archive = export_deck(deck, _CLI_FORMATS[fmt])
    except NbdeckError as exc:
        raise click.ClickException(str(exc)) from exc
    Path(out).write_bytes(archive.payload)
    click.echo(f"wrote {len(deck.slides)} slides to {out}")


@main.command()
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--sessions", "sessions_dir", type=click.Path(file_okay=False),
              default=None, help="Directory for persisted deck sessions.")
@click.option("--static", "static_dir", type=click.Path(file_okay=False),
              default=None, help="Built web UI directory to serve at /.")
def serve(port, host, sessions_dir, static_dir):
    """Run the HTTP service (and the web UI, when built)."""
    import uvicorn

    from .service import create_app

    app = create_app(sessions_dir=sessions_dir, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")


@main.command(name="eval")
@click.option("--corpus", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--gold", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--out", required=True, type=click.Path(dir_okay=False))
@click.option("--audience", type=click.Choice(["technical", "nontechnical"]),
              default="technical", show_default=True)
def eval_cmd(corpus, gold, out, audience):
    """Evaluate bullet placement over a labeled notebook corpus."""
    config = _config(audience, 2, "eval", "", "builtin", "builtin")
    try:
        report = evaluate_corpus(corpus, gold, config)
    except NbdeckError as exc:
        raise click.ClickException(str(exc)) from exc
    Path(out).write_text(report.to_csv(), encoding="utf-8")
    click.echo(
        f"evaluated {report.corpus_size} notebooks "
        f"({len(report.skipped)} skipped); report at {out}"
    )
    if report.skipped:
        click.echo("skipped: " + ", ".join(report.skipped), err=True)


if __name__ == "__main__":
    sys.exit(main())
