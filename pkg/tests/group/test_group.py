"""Tests for finite groups, actions, orbits and representations."""

import pytest

from hmcat.errors import ActionError, GroupError, NonFreeActionError, RepresentationError, TransversalError
from hmcat.group.action import AlgebraAction, GroupAction, induced_algebra_action, validate_action, validate_algebra_action
from hmcat.group.finite_group import (
    FiniteGroup,
    conjugacy_classes,
    cyclic_group,
    direct_product,
    group_algebra,
    symmetric_group,
)
from hmcat.group.orbits import check_transversal, orbits_transversal
from hmcat.group.representations import Representation, averaging_check, coinvariants, invariants
from hmcat.lincat.algebra import truncated_polynomial, validate_algebra
from hmcat.lincat.matrices import from_dod, identity
from hmcat.lincat.scalars import Field
from hmcat.verify.fixtures import load_fixture


class TestFiniteGroup:
    """Tests for multiplication tables and conjugacy classes."""

    def test_cyclic_group(self) -> None:
        """Test labels and multiplication in C3."""
        g = cyclic_group(3)
        assert g.labels == ("1", "s", "s^2")
        assert g.mul(2, 2) == 1
        assert g.inverse(1) == 2
        assert g.product([1, 1, 1]) == 0

    def test_symmetric_group_classes(self) -> None:
        """Test that S3 has three conjugacy classes of sizes 1, 3, 2."""
        classes = conjugacy_classes(symmetric_group(3))
        assert len(classes) == 3
        assert classes.classes[0] == (0,)
        assert sorted(len(c) for c in classes.classes) == [1, 2, 3]

    def test_abelian_classes_are_singletons(self) -> None:
        """Test that every class of C2×C2 is a single element."""
        classes = conjugacy_classes(direct_product(cyclic_group(2), cyclic_group(2)))
        assert all(len(c) == 1 for c in classes.classes)
        assert len(classes) == 4

    def test_class_label(self) -> None:
        """Test that class labels list their elements."""
        g = cyclic_group(2)
        assert conjugacy_classes(g).label(g, 1) == "{s}"

    def test_from_table_by_labels(self) -> None:
        """Test building C2 from a table of labels."""
        g = FiniteGroup.from_table(["e", "a"], [["e", "a"], ["a", "e"]], name="C2")
        assert g.order == 2
        assert g.mul(1, 1) == 0

    def test_from_table_rejects_non_group(self) -> None:
        """Test that a table without inverses is refused."""
        with pytest.raises(GroupError):
            FiniteGroup.from_table(["e", "a"], [["e", "a"], ["a", "a"]])

    def test_group_algebra(self) -> None:
        """Test that kG is an associative unital algebra of dimension |G|."""
        kg = group_algebra(symmetric_group(3), Field(5))
        assert kg.dimension == 6
        assert validate_algebra(kg).ok


class TestGroupAction:
    """Tests for actions on categories and algebras."""

    def test_swap_is_free(self) -> None:
        """Test that the swap action validates and is free."""
        doc = load_fixture("swap")
        assert validate_action(doc.action).ok
        assert doc.action.is_free

    def test_sign_is_not_free(self) -> None:
        """Test that an action fixing its only object is not free."""
        doc = load_fixture("sign")
        assert validate_action(doc.action).ok
        assert not doc.action.is_free
        assert doc.action.stabilizer(0) == (0, 1)

    def test_generator_of_wrong_order(self) -> None:
        """Test that t ↦ 2t does not define a C2 action over F5."""
        c = load_fixture("sign").category
        t = c.label_index["t"]
        images = [c.basis_vector(0), {t: c.field(2)}]
        with pytest.raises(ActionError, match="not a group action"):
            GroupAction.from_generators(cyclic_group(2), c, {1: ((0,), images)})

    def test_non_functorial_images(self) -> None:
        """Test that sending t to 1 breaks composition."""
        c = load_fixture("sign").category
        one = c.label_index["1"]
        images = ((c.basis_vector(0), c.basis_vector(1)), (c.basis_vector(0), {one: c.field.one}))
        bad = GroupAction(cyclic_group(2), c, ((0,), (0,)), images)
        report = validate_action(bad)
        assert not report.ok
        assert {v.kind for v in report.violations} >= {"composition"}

    def test_trivial_action(self) -> None:
        """Test that the trivial action of C3 validates."""
        c = load_fixture("matrix2").category
        assert validate_action(GroupAction.trivial(cyclic_group(3), c)).ok

    def test_algebra_action(self) -> None:
        """Test t ↦ −t on k[t]/(t^3) as an algebra action."""
        lam = truncated_polynomial(Field(5), 3)
        f = lam.field
        action = AlgebraAction.from_generators(cyclic_group(2), lam, {1: [{0: f.one}, {1: f(-1)}, {2: f.one}]})
        assert validate_algebra_action(action).ok

    def test_induced_algebra_action(self) -> None:
        """Test that a(C) inherits the swap action."""
        doc = load_fixture("swap")
        induced = induced_algebra_action(doc.action)
        assert induced.algebra.dimension == doc.category.dimension
        assert validate_algebra_action(induced).ok


class TestOrbits:
    """Tests for orbits, transversals and witnesses."""

    def test_free_orbit(self) -> None:
        """Test the single orbit of the swap action."""
        a = load_fixture("swap").action
        data = orbits_transversal(a)
        assert data.orbits == ((0, 1),)
        assert data.transversal == (0,)
        assert data.witness == (0, 1)
        assert data.anchor(a.group, 1) == 1

    def test_preferred_transversal(self) -> None:
        """Test that a preferred object becomes the representative."""
        a = load_fixture("swap").action
        data = orbits_transversal(a, ["y"])
        assert data.transversal == (1,)
        assert data.witness == (1, 0)

    def test_unknown_preferred_object(self) -> None:
        """Test that an unknown preferred object is refused."""
        with pytest.raises(TransversalError):
            orbits_transversal(load_fixture("swap").action, ["z"])

    def test_require_free(self) -> None:
        """Test that a short orbit raises NonFreeActionError naming it."""
        a = load_fixture("sign").action
        data = orbits_transversal(a)
        with pytest.raises(NonFreeActionError, match="resolving_category") as exc:
            data.require_free(a.category.objects, a.group.order)
        assert exc.value.orbit == ("o",)

    def test_check_transversal(self) -> None:
        """Test that both objects of one orbit are not a transversal."""
        a = load_fixture("swap").action
        check_transversal(a, [1])
        with pytest.raises(TransversalError):
            check_transversal(a, [0, 1])


class TestRepresentations:
    """Tests for coinvariants, invariants and averaging."""

    def _regular(self, field: Field) -> Representation:
        swap = from_dod({0: {1: field.one}, 1: {0: field.one}}, (2, 2), field)
        return Representation(cyclic_group(2), field, 2, (identity(2, field), swap))

    def _sign(self, field: Field) -> Representation:
        minus = from_dod({0: {0: field(-1)}}, (1, 1), field)
        return Representation(cyclic_group(2), field, 1, (identity(1, field), minus))

    def test_regular_representation(self) -> None:
        """Test that k[C2] has one-dimensional (co)invariants."""
        rep = self._regular(Field(5))
        assert coinvariants(rep).dimension == 1
        assert invariants(rep).dimension == 1
        assert averaging_check(rep) is True

    def test_sign_representation(self) -> None:
        """Test that the sign representation has no (co)invariants over F5."""
        rep = self._sign(Field(5))
        assert coinvariants(rep).dimension == 0
        assert invariants(rep).dimension == 0

    def test_sign_in_characteristic_two(self) -> None:
        """Test that −1 = 1 over F2 and averaging does not apply."""
        rep = self._sign(Field(2))
        assert coinvariants(rep).dimension == 1
        assert averaging_check(rep) is None

    def test_not_a_representation(self) -> None:
        """Test that s² ≠ 1 is refused."""
        f = Field(5)
        bad = Representation(cyclic_group(2), f, 1, (identity(1, f), from_dod({0: {0: f(2)}}, (1, 1), f)))
        with pytest.raises(RepresentationError):
            bad.check()
