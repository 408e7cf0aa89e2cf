"""Exception types shared across the package.

The service layer maps these onto HTTP status codes; everything else
raises them directly.
"""


class NbdeckError(Exception):
    """Base class for all package errors."""


class MalformedNotebook(NbdeckError):
    """Input is not a parseable notebook file (bad JSON, missing cells list)."""


class UnsupportedVersion(NbdeckError):
    """Notebook file format major version is not 4."""


class NotALeaf(NbdeckError):
    """A tree operation expected a code leaf node."""


class DimensionMismatch(NbdeckError):
    """Cosine similarity of vectors with different dimensions."""


class RemoteUnavailable(NbdeckError):
    """A remote embedding/summarization endpoint failed or timed out."""


class EmptyEvidence(NbdeckError):
    """Summarization request carried no source, comments, or context."""


class UnknownSlide(NbdeckError):
    """Slide id not present in the deck."""


class CannotDeleteTitle(NbdeckError):
    """The title page cannot be deleted."""


class InvalidBulletText(NbdeckError):
    """Bullet edits may only use inline markup, not block-level markdown."""


class UnknownDeck(NbdeckError):
    """No session exists for the given deck id."""


class RevisionConflict(NbdeckError):
    """Mutation carried a stale expected revision."""


class MalformedDeck(NbdeckError):
    """Payload is not a valid canonical deck archive."""


class VersionMismatch(NbdeckError):
    """Deck archive was produced by an incompatible template version."""


class MissingGold(NbdeckError):
    """A corpus notebook has no matching gold label file."""
