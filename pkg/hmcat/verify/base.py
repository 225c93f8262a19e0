"""Base classes for theorem checks."""

from abc import ABC, abstractmethod
from dataclasses import dataclass

from ..config import ComputeProfile
from ..io import Document
from .report import TheoremReport


@dataclass
class CheckRequest:
    """One theorem to check on one document."""

    index: int
    theorem: str
    fixture: str
    document: Document | None = None


class TheoremCheck(ABC):
    """A named theorem turned into an executable comparison.

    Each check builds both sides of its statement from a document and
    returns a report; mathematical failures become FAILED rows, never
    exceptions.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Theorem identifier used on the command line."""
        ...

    @property
    @abstractmethod
    def description(self) -> str:
        ...

    @property
    def default_fixtures(self) -> tuple[str, ...]:
        """Packaged fixtures ``verify all`` runs this check on."""
        return ()

    @property
    def needs_document(self) -> bool:
        return True

    @abstractmethod
    def run(self, doc: Document | None, profile: ComputeProfile, fixture: str = "") -> TheoremReport:
        ...
