"""Packaged fixture documents."""

import logging
from pathlib import Path

import yaml

from ..group.action import GroupAction
from ..group.finite_group import trivial_group
from ..io import Document, load_document
from ..lincat.scalars import Field

logger = logging.getLogger(__name__)

FIXTURES_DIR = Path(__file__).parent / "fixtures"


def list_fixtures() -> list[str]:
    return sorted(p.stem for p in FIXTURES_DIR.glob("*.yaml"))


def fixture_description(name: str) -> str:
    """The comment header of a packaged fixture, without the file name."""
    path = FIXTURES_DIR / f"{name}.yaml"
    first = path.read_text(encoding="utf-8").splitlines()[0]
    return first.lstrip("# ").split(" - ", 1)[-1]


def load_fixture(name_or_path: str | Path, field: Field | None = None) -> Document:
    """Load a packaged fixture by name, or any document by path.

    Raises:
        ValueError: If neither a fixture nor a file matches.
    """
    path = Path(name_or_path).expanduser()
    if not path.exists():
        path = FIXTURES_DIR / f"{name_or_path}.yaml"
    if not path.exists():
        raise ValueError(f"Unknown fixture: {name_or_path}. Available: {', '.join(list_fixtures())}")
    doc = load_document(path, field)
    logger.debug(f"loaded fixture {doc.name or path.stem} over {doc.category.field}")
    return doc


def acting(doc: Document) -> GroupAction:
    """The document's action, or the trivial group acting on its category."""
    if doc.action is not None:
        return doc.action
    return GroupAction.trivial(trivial_group(), doc.category)


def fixture_text(name: str) -> str:
    """The fixture rendered back as YAML, with scalars normalized."""
    with open(FIXTURES_DIR / f"{name}.yaml", encoding="utf-8") as f:
        return yaml.safe_dump(yaml.safe_load(f), sort_keys=False, allow_unicode=True)
