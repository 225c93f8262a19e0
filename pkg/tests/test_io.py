"""Tests for YAML documents and cochain files."""

from pathlib import Path

import pytest
import yaml

from hmcat.errors import StructureError
from hmcat.group.action import validate_action
from hmcat.io import (
    cochain_from_dict,
    cochain_to_dict,
    document_from_dict,
    document_to_dict,
    dump_document,
    load_cochain,
    load_document,
)
from hmcat.lincat.algebra import total_algebra
from hmcat.lincat.scalars import Field
from hmcat.verify.fixtures import FIXTURES_DIR, load_fixture


class TestDocuments:
    """Tests for reading and writing documents."""

    def test_round_trip(self, tmp_path: Path) -> None:
        """Test that a dumped document reads back to the same structure."""
        doc = load_fixture("swap")
        path = tmp_path / "swap.yaml"
        dump_document(doc, path)
        back = load_document(path)
        assert back.category.objects == doc.category.objects
        assert total_algebra(back.category).same_table(total_algebra(doc.category))
        assert back.action.object_perm == doc.action.object_perm
        assert back.transversal == ("x",)
        assert validate_action(back.action).ok

    def test_signs_are_kept(self) -> None:
        """Test that t ↦ −t survives serialization as a residue."""
        data = document_to_dict(load_fixture("sign"))
        assert data["action"]["s"]["morphisms"] == {"t": {"t": 4}}
        assert document_from_dict(data).action.images[1] == load_fixture("sign").action.images[1]

    def test_field_rebinding(self) -> None:
        """Test that --field style rebinding reads scalars in another field."""
        doc = load_document(FIXTURES_DIR / "sign.yaml", Field(0))
        assert doc.category.field == Field(0)
        t = doc.category.label_index["t"]
        assert doc.action.images[1][t] == {t: Field(0)(-1)}

    def test_missing_section(self) -> None:
        """Test that a document without identities is refused."""
        with pytest.raises(StructureError, match="identities"):
            document_from_dict({"objects": ["o"], "hom": []})

    def test_unknown_group_element(self) -> None:
        """Test that actions may only name group elements."""
        data = yaml.safe_load((FIXTURES_DIR / "sign.yaml").read_text())
        data["action"] = {"r": {}}
        with pytest.raises(StructureError, match="unknown group element"):
            document_from_dict(data)

    def test_unknown_transversal_object(self) -> None:
        """Test that the transversal must list objects of the category."""
        data = yaml.safe_load((FIXTURES_DIR / "swap.yaml").read_text())
        data["transversal"] = ["z"]
        with pytest.raises(StructureError, match="Transversal"):
            document_from_dict(data)

    def test_not_a_mapping(self) -> None:
        """Test that a document must be a mapping."""
        with pytest.raises(StructureError):
            document_from_dict(["o"])

    def test_invalid_yaml(self, tmp_path: Path) -> None:
        """Test that unparsable YAML raises StructureError."""
        path = tmp_path / "bad.yaml"
        path.write_text("objects: [o\n")
        with pytest.raises(StructureError, match="not valid YAML"):
            load_document(path)

    def test_missing_file(self, tmp_path: Path) -> None:
        """Test that a missing document raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_document(tmp_path / "nope.yaml")


class TestCochains:
    """Tests for cochain files."""

    @pytest.fixture
    def c(self):
        return load_fixture("sign").category

    def test_from_dict(self, c) -> None:
        """Test the derivation t ↦ t as a degree-1 cochain."""
        degree, entries = cochain_from_dict(c, {"degree": 1, "entries": [{"path": ["t"], "value": "t"}]})
        t = c.label_index["t"]
        assert degree == 1
        assert entries == {((t,), t): c.field.one}

    def test_to_dict(self, c) -> None:
        """Test that entries are written over basis labels."""
        t = c.label_index["t"]
        data = cochain_to_dict(c, 1, {((t,), t): c.field(2)})
        assert data == {"degree": 1, "entries": [{"path": ["t"], "value": "t", "coeff": 2}]}

    def test_zero_entries_dropped(self, c) -> None:
        """Test that cancelling entries leave an empty cochain."""
        rows = [{"path": [], "value": "1", "coeff": 1}, {"path": [], "value": "1", "coeff": -1}]
        assert cochain_from_dict(c, {"degree": 0, "entries": rows}) == (0, {})

    @pytest.mark.parametrize(
        "data, message",
        [
            ({"entries": []}, "integer 'degree'"),
            ({"degree": 1, "entries": [{"path": [], "value": "t"}]}, "path of length 0"),
            ({"degree": 0, "entries": [{"path": [], "value": "u"}]}, "unknown basis label"),
        ],
    )
    def test_errors(self, c, data: dict, message: str) -> None:
        """Test malformed cochain files."""
        with pytest.raises(StructureError, match=message):
            cochain_from_dict(c, data)

    def test_load_cochain(self, c, tmp_path: Path) -> None:
        """Test reading a cochain file."""
        path = tmp_path / "phi.yaml"
        path.write_text("degree: 0\nentries:\n  - {path: [], value: t}\n")
        assert load_cochain(path, c) == (0, {((), c.label_index["t"]): c.field.one})
