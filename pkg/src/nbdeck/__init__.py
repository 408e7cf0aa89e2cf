"""nbdeck: audience-conditioned slide decks from Jupyter notebooks."""

from .deck import (
    Bullet,
    DeckConfig,
    Slide,
    SlideDeck,
    add_slide,
    delete_slide,
    edit_slide,
    generate_deck,
    links_for,
)
from .embedding import EmbedderHandle
from .export import DeckArchive, export_deck, import_deck
from .notebook import (
    Cell,
    NotebookDocument,
    OutputArtifact,
    parse_notebook,
    parse_notebook_file,
)
from .summarizer import SummarizerHandle
from .templates import OutlineTemplate, SectionSpec, template_for
from .tree import NotebookTree, build_tree, leaf_context

__version__ = "0.1.0"

__all__ = [
    "Bullet",
    "Cell",
    "DeckArchive",
    "DeckConfig",
    "EmbedderHandle",
    "NotebookDocument",
    "NotebookTree",
    "OutlineTemplate",
    "OutputArtifact",
    "SectionSpec",
    "Slide",
    "SlideDeck",
    "SummarizerHandle",
    "add_slide",
    "build_tree",
    "delete_slide",
    "edit_slide",
    "export_deck",
    "generate_deck",
    "import_deck",
    "leaf_context",
    "links_for",
    "parse_notebook",
    "parse_notebook_file",
    "template_for",
]
