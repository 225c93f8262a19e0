"""Tests for cochain complexes, cup products, invariants, transport and transfer maps."""

import pytest

from hmcat.cohomology.center import center, check_center_matches_h0
from hmcat.cohomology.classes import class_cohomology, class_decomposition_cochains
from hmcat.cohomology.cochains import (
    CoboundarySign,
    coboundary_failures,
    cochain_complex,
    cochain_type,
    count_cochains,
    restrict_cochains,
)
from hmcat.cohomology.cup import associativity_failures, cup, leibniz_failures, unit, unit_failures
from hmcat.cohomology.invariants import (
    action_cup_failures,
    attach_g_action_cochains,
    invariant_complex,
    invariant_cup_failures,
)
from hmcat.cohomology.ranks import cocycle_basis, cohomology
from hmcat.cohomology.transfer import transfer_maps_cohomology
from hmcat.cohomology.transport import transport_cochains
from hmcat.constructions.grading import Grading
from hmcat.constructions.quotient import quotient_category
from hmcat.constructions.resolving import resolving_category
from hmcat.errors import ComplexError, NonFreeActionError
from hmcat.group.finite_group import cyclic_group
from hmcat.lincat.matrices import apply
from hmcat.lincat.scalars import Field
from hmcat.verify.fixtures import load_fixture


class TestCochainComplex:
    """Tests for C^•(C) and HH^*."""

    def test_point(self) -> None:
        """Test that HH^*(k) is k in degree 0."""
        cx = cochain_complex(load_fixture("triv").category, 3)
        assert cx.dimensions == (1, 1, 1, 1, 1)
        assert cohomology(cx).dimensions == (1, 0, 0, 0)

    def test_dual_numbers(self) -> None:
        """Test HH^n(k[t]/(t^2)) over F5."""
        c = load_fixture("sign").category
        cx = cochain_complex(c, 3)
        assert cx.dimensions == (2, 4, 8, 16, 32)
        assert coboundary_failures(cx) == []
        assert cohomology(cx).dimensions == (2, 1, 1, 1)

    def test_sign_convention_does_not_change_ranks(self) -> None:
        """Test that the shifted coboundary gives the same dimensions."""
        c = load_fixture("sign").category
        shifted = cochain_complex(c, 3, sign=CoboundarySign.SHIFTED)
        assert shifted.sign is CoboundarySign.SHIFTED
        assert cohomology(shifted).dimensions == cohomology(cochain_complex(c, 3)).dimensions

    def test_matrix_algebra(self) -> None:
        """Test that M_2(k) is separable."""
        cx = cochain_complex(load_fixture("matrix2").category, 2)
        assert cohomology(cx).dimensions == (1, 0, 0)

    def test_count_cochains(self) -> None:
        """Test that counting matches enumeration."""
        c = load_fixture("swap").category
        cx = cochain_complex(c, 2)
        assert tuple(count_cochains(c, n) for n in range(4)) == cx.dimensions

    def test_cocycles_are_closed(self) -> None:
        """Test that cocycle representatives lie in the kernel of d."""
        cx = cochain_complex(load_fixture("sign").category, 2)
        for vec in cocycle_basis(cx, 1):
            assert not apply(cx.coboundaries[1], vec)

    def test_negative_degree(self) -> None:
        """Test that the degree bound must be nonnegative."""
        with pytest.raises(ComplexError):
            cochain_complex(load_fixture("triv").category, -1)


class TestCenter:
    """Tests for Z(C) against HH^0."""

    @pytest.mark.parametrize("name, expected", [("sign", 2), ("matrix2", 1), ("discrete-swap", 2)])
    def test_center_dimension(self, name: str, expected: int) -> None:
        """Test the dimension of the center on small fixtures."""
        c = load_fixture(name).category
        assert center(c).dimension == expected
        assert check_center_matches_h0(c, cochain_complex(c, 1))


class TestCup:
    """Tests for the cup product."""

    @pytest.fixture
    def cx(self):
        return cochain_complex(load_fixture("sign").category, 2)

    def test_unit(self, cx) -> None:
        """Test that Σ 1_x is a two-sided unit."""
        assert unit(cx)
        assert unit_failures(cx) == []

    def test_leibniz(self, cx) -> None:
        """Test the Leibniz rule under both sign conventions."""
        assert leibniz_failures(cx) == []
        shifted = cochain_complex(load_fixture("sign").category, 2, sign=CoboundarySign.SHIFTED)
        assert leibniz_failures(shifted) == []

    def test_associativity(self, cx) -> None:
        """Test that the cup product is associative on basis triples."""
        assert associativity_failures(cx, limit=200) == []

    def test_beyond_top(self, cx) -> None:
        """Test that a product landing above the complex is refused."""
        one = cx.field.one
        with pytest.raises(ComplexError, match="beyond the complex"):
            cup(cx, 2, {0: one}, 2, {0: one})


class TestInvariants:
    """Tests for C^•(C)^G."""

    def test_sign_invariants(self) -> None:
        """Test HH^n(k[t]/(t^2))^G for t ↦ −t."""
        doc = load_fixture("sign")
        base = attach_g_action_cochains(cochain_complex(doc.category, 3), doc.action)
        inv = invariant_complex(base)
        assert cohomology(inv).dimensions == (1, 1, 1, 1)

    def test_action_respects_cup(self) -> None:
        """Test that G acts by algebra maps and invariants are closed under ⌣."""
        doc = load_fixture("sign")
        base = attach_g_action_cochains(cochain_complex(doc.category, 2), doc.action)
        assert action_cup_failures(base, limit=100) == []
        assert invariant_cup_failures(base, invariant_complex(base)) == []

    def test_requires_action(self) -> None:
        """Test that a complex without an action has no invariants."""
        with pytest.raises(ComplexError):
            invariant_complex(cochain_complex(load_fixture("triv").category, 1))


class TestCochainClasses:
    """Tests for the class splitting of graded cochain complexes."""

    def test_quotient_classes(self) -> None:
        """Test HH^*_{1}(C/G) for the swap and the sum over classes."""
        q = quotient_category(load_fixture("swap").action)
        cx = cochain_complex(q.category, 3, grading=q.grading)
        dec = class_decomposition_cochains(cx, q.grading)
        assert dec.ok
        per_class = class_cohomology(dec, q.grading)
        assert per_class["{1}"].dimensions == (1, 1, 1, 1)
        assert cohomology(cx).dimensions == (2, 1, 1, 1)
        assert dec.total_dimensions() == cx.dimensions

    def test_degree_zero_type(self) -> None:
        """Test that a degree-0 cochain valued in degree s has type s^{-1}."""
        c = load_fixture("sign").category
        group = cyclic_group(3)
        grading = Grading.from_labels(group, c, {"t": "s"})
        t = c.label_index["t"]
        assert cochain_type(c, grading, ((), t)) == group.index["s^2"]
        assert cochain_type(c, grading, ((t,), t)) == group.identity

    def test_single_class_filter(self) -> None:
        """Test that conjugacy_class=0 agrees with the identity block."""
        q = quotient_category(load_fixture("swap").action)
        dec = class_decomposition_cochains(cochain_complex(q.category, 2, grading=q.grading), q.grading)
        one = cochain_complex(q.category, 2, grading=q.grading, conjugacy_class=0)
        assert one.dimensions == dec.blocks[0].dimensions


class TestTransport:
    """Tests for C•F along full and faithful functors."""

    def test_resolving_functor(self) -> None:
        """Test that L: M_G(C) → C transports cochains multiplicatively."""
        doc = load_fixture("sign")
        m = resolving_category(doc.action)
        source = cochain_complex(doc.category, 2)
        target = cochain_complex(m.category, 2)
        t = transport_cochains(m.functor, source, target)
        assert t.cochain_map_failures() == []
        assert t.multiplicativity_failures(limit=100) == []
        assert cohomology(target).dimensions == cohomology(source).dimensions

    def test_incomplete_target(self) -> None:
        """Test that a target complex missing a basis cochain is refused."""
        doc = load_fixture("sign")
        m = resolving_category(doc.action)
        full = cochain_complex(m.category, 1)
        keep = [list(range(dim)) for dim in full.dimensions]
        keep[0] = keep[0][1:]
        target = restrict_cochains(full, keep)
        with pytest.raises(ComplexError, match="outside the target basis"):
            transport_cochains(m.functor, cochain_complex(doc.category, 1), target)


class TestCohomologyTransfer:
    """Tests for the inverse cochain maps A and B."""

    def test_swap(self) -> None:
        """Test that A and B are inverse, multiplicative cochain maps for the swap."""
        transfer = transfer_maps_cohomology(load_fixture("swap").action, 2)
        assert transfer.failures() == []
        assert transfer.multiplicativity_failures() == []
        assert cohomology(transfer.source).dimensions == cohomology(transfer.target).dimensions == (1, 1, 1)

    def test_non_free(self) -> None:
        """Test that the transfer needs a free action."""
        with pytest.raises(NonFreeActionError):
            transfer_maps_cohomology(load_fixture("sign").action, 1)

    def test_rational_field(self) -> None:
        """Test the swap transfer over Q."""
        transfer = transfer_maps_cohomology(load_fixture("swap", Field(0)).action, 1)
        assert transfer.failures() == []
