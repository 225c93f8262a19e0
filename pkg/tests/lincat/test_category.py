"""Tests for finite k-linear categories, scalars and total algebras."""

from fractions import Fraction

import pytest

from hmcat.errors import FieldMismatchError, StructureError
from hmcat.lincat.algebra import (
    full_subcategory,
    matrix_algebra,
    single_object_category,
    tensor_product,
    total_algebra,
    truncated_polynomial,
)
from hmcat.lincat.category import LinCat
from hmcat.lincat.scalars import Field
from hmcat.lincat.validation import validate_category


def _dual_numbers(field: Field) -> LinCat:
    return LinCat.build(
        field,
        ["o"],
        {("o", "o"): ["1", "t"]},
        {("1", "1"): {"1": 1}, ("1", "t"): {"t": 1}, ("t", "1"): {"t": 1}},
        {"o": {"1": 1}},
        name="dual",
    )


def _arrow(field: Field) -> LinCat:
    return LinCat.build(
        field,
        ["x", "y"],
        {("x", "x"): ["1x"], ("y", "y"): ["1y"], ("y", "x"): ["a"]},
        {("1x", "1x"): {"1x": 1}, ("1y", "1y"): {"1y": 1}, ("a", "1x"): {"a": 1}, ("1y", "a"): {"a": 1}},
        {"x": {"1x": 1}, "y": {"1y": 1}},
        name="arrow",
    )


class TestField:
    """Tests for Field parsing and scalar conversion."""

    def test_parse_descriptors(self) -> None:
        """Test primes, F-prefixed names and the rationals."""
        assert Field.parse(5) == Field(5)
        assert Field.parse("F7") == Field(7)
        assert Field.parse("Q") == Field(0)
        assert Field.parse("rationals").name == "Q"

    def test_rejects_composite_characteristic(self) -> None:
        """Test that a non-prime characteristic is refused."""
        with pytest.raises(StructureError, match="prime"):
            Field(4)

    def test_rejects_unknown_descriptor(self) -> None:
        """Test that garbage descriptors raise StructureError."""
        with pytest.raises(StructureError):
            Field.parse("R")

    def test_residues_and_fractions(self) -> None:
        """Test conversion of negative ints and fractions."""
        f5 = Field(5)
        assert f5.to_text(f5(-1)) == 4
        assert f5.to_text(f5("1/2")) == 3
        q = Field(0)
        assert q.to_text(q(Fraction(6, 4))) == "3/2"
        assert q.to_text(q(4)) == 4

    def test_is_unit(self) -> None:
        """Test invertibility of group orders."""
        assert Field(5).is_unit(2)
        assert not Field(2).is_unit(2)
        assert not Field(3).is_unit(6)
        assert Field(0).is_unit(6)

    def test_division_by_zero(self) -> None:
        """Test that dividing by zero raises."""
        f5 = Field(5)
        with pytest.raises(ZeroDivisionError):
            f5.inverse(f5.zero)


class TestLinCat:
    """Tests for building and composing in a LinCat."""

    def test_build_and_compose(self) -> None:
        """Test hom bases and composition of vectors."""
        c = _arrow(Field(5))
        assert c.dimension == 3
        x, y = c.object_index["x"], c.object_index["y"]
        assert [c.label(i) for i in c.hom(y, x)] == ["a"]
        assert c.hom(x, y) == ()
        a = c.label_index["a"]
        assert c.compose(c.identities[y], {a: c.field(2)}) == {a: c.field(2)}

    def test_duplicate_label(self) -> None:
        """Test that repeated basis labels are refused."""
        with pytest.raises(StructureError, match="Duplicate basis label"):
            LinCat.build(Field(5), ["o"], {("o", "o"): ["1", "1"]}, {}, {"o": {"1": 1}})

    def test_unknown_object(self) -> None:
        """Test that hom spaces may only mention declared objects."""
        with pytest.raises(StructureError, match="unknown object"):
            LinCat.build(Field(5), ["o"], {("o", "p"): ["f"]}, {}, {"o": {}})

    def test_missing_identity(self) -> None:
        """Test that every object needs an identity."""
        with pytest.raises(StructureError, match="No identity"):
            LinCat.build(Field(5), ["o", "p"], {("o", "o"): ["1"]}, {("1", "1"): {"1": 1}}, {"o": {"1": 1}})

    def test_factorizations(self) -> None:
        """Test that t factors as 1∘t and t∘1."""
        c = _dual_numbers(Field(5))
        t = c.label_index["t"]
        pairs = {(c.label(g), c.label(f)) for g, f, _ in c.factorizations[t]}
        assert pairs == {("1", "t"), ("t", "1")}


class TestValidation:
    """Tests for category axiom checks."""

    def test_valid_categories(self) -> None:
        """Test that well-formed categories produce no violations."""
        assert validate_category(_dual_numbers(Field(5))).ok
        assert validate_category(_arrow(Field(0))).ok

    def test_non_composable_pair(self) -> None:
        """Test that a composite of a non-composable pair is reported."""
        c = LinCat.build(
            Field(5),
            ["x", "y"],
            {("x", "x"): ["1x"], ("y", "y"): ["1y"], ("y", "x"): ["a"]},
            {("1x", "1x"): {"1x": 1}, ("1y", "1y"): {"1y": 1}, ("a", "1x"): {"a": 1}, ("1y", "a"): {"a": 1}, ("a", "a"): {"a": 1}},
            {"x": {"1x": 1}, "y": {"1y": 1}},
        )
        report = validate_category(c)
        assert not report.ok
        assert any(v.kind == "block" for v in report.violations)

    def test_broken_identity(self) -> None:
        """Test that a missing unit law is reported."""
        c = LinCat.build(
            Field(5),
            ["o"],
            {("o", "o"): ["1", "t"]},
            {("1", "1"): {"1": 1}, ("1", "t"): {"t": 1}},
            {"o": {"1": 1}},
        )
        assert not validate_category(c).ok


class TestTotalAlgebra:
    """Tests for a(C), Λ₁ and tensor products."""

    def test_total_algebra_round_trip(self) -> None:
        """Test that a(Λ₁) has the table of Λ."""
        lam = truncated_polynomial(Field(5), 3)
        lam1 = single_object_category(lam)
        assert len(lam1.objects) == 1
        assert total_algebra(lam1).same_table(lam)

    def test_unit_is_sum_of_identities(self) -> None:
        """Test that the unit of a(C) is 1_x + 1_y."""
        c = _arrow(Field(5))
        unit = total_algebra(c).unit
        assert set(unit) == {c.label_index["1x"], c.label_index["1y"]}

    def test_matrix_algebra_table(self) -> None:
        """Test E12·E21 = E11 in M_2(k)."""
        m = matrix_algebra(Field(5), 2)
        e12, e21, e11 = m.labels.index("E12"), m.labels.index("E21"), m.labels.index("E11")
        assert m.multiply({e12: m.field.one}, {e21: m.field.one}) == {e11: m.field.one}

    def test_tensor_product_dimensions(self) -> None:
        """Test that dimensions multiply under ⊗."""
        c, d = _arrow(Field(5)), _dual_numbers(Field(5))
        cd = tensor_product(c, d)
        assert len(cd.objects) == 2
        assert cd.dimension == c.dimension * d.dimension
        assert validate_category(cd).ok

    def test_tensor_product_field_mismatch(self) -> None:
        """Test that factors must share the base field."""
        with pytest.raises(FieldMismatchError):
            tensor_product(_arrow(Field(5)), _dual_numbers(Field(3)))

    def test_full_subcategory(self) -> None:
        """Test the full subcategory on one object and its inclusion."""
        c = _arrow(Field(5))
        sub, inclusion = full_subcategory(c, [c.object_index["y"]], name="y")
        assert sub.objects == ("y",)
        assert sub.dimension == 1
        assert inclusion.is_full
        assert inclusion.is_faithful
