from .app import create_app
from .sessions import DeckSession, SessionStore

__all__ = ["create_app", "DeckSession", "SessionStore"]
