"""Tests for bar complexes, coinvariants, class decompositions and transfer maps."""

import pytest

from hmcat.constructions.quotient import quotient_category
from hmcat.constructions.skew import skew_category
from hmcat.errors import ComplexError, ResourceBudgetError
from hmcat.group.representations import coinvariants
from hmcat.homology.chains import attach_g_action, bar_complex, boundary_failures, count_cycles
from hmcat.homology.classes import check_class_sum, class_decomposition, class_homology
from hmcat.homology.coinvariants import coinvariant_complex
from hmcat.homology.ranks import HomologyResult, homology, homology_representation
from hmcat.homology.transfer import transfer_maps_homology
from hmcat.lincat.scalars import Field
from hmcat.verify.fixtures import load_fixture


class TestBarComplex:
    """Tests for C_•(C) and its homology."""

    def test_point(self) -> None:
        """Test that k has one chain per degree and homology k in degree 0."""
        c = load_fixture("triv").category
        cx = bar_complex(c, 3)
        assert cx.dimensions == (1, 1, 1, 1, 1)
        assert cx.max_degree == 3
        assert homology(cx).dimensions == (1, 0, 0, 0)

    def test_result_defaults(self) -> None:
        """Test that a bare HomologyResult has its field name and no class dimensions."""
        result = HomologyResult((1,), (1,), (0,), field="F5")
        assert result.field == "F5"
        assert result.class_dimensions == {}
        assert result.to_dict()["field"] == "F5"

    def test_dual_numbers(self) -> None:
        """Test HH_n(k[t]/(t^2)) over F5."""
        c = load_fixture("sign").category
        cx = bar_complex(c, 3)
        assert cx.dimensions == (2, 4, 8, 16, 32)
        assert boundary_failures(cx) == []
        assert homology(cx).dimensions == (2, 1, 1, 1)

    @pytest.mark.parametrize("field, expected", [(Field(2), (2, 2, 2, 2)), (Field(0), (2, 1, 1, 1))])
    def test_dual_numbers_other_fields(self, field: Field, expected: tuple[int, ...]) -> None:
        """Test that the 2t in the periodic complex vanishes only in characteristic 2."""
        c = load_fixture("sign", field).category
        assert homology(bar_complex(c, 3)).dimensions == expected

    def test_discrete_category(self) -> None:
        """Test that two points have homology k² in degree 0."""
        c = load_fixture("discrete-swap").category
        assert homology(bar_complex(c, 2)).dimensions == (2, 0, 0)

    def test_matrix_algebra(self) -> None:
        """Test Morita invariance: HH_n(M_2(k)) = HH_n(k)."""
        c = load_fixture("matrix2").category
        cx = bar_complex(c, 2)
        assert cx.dimensions[:3] == (4, 16, 64)
        assert homology(cx).dimensions == (1, 0, 0)

    def test_negative_degree(self) -> None:
        """Test that the degree bound must be nonnegative."""
        with pytest.raises(ComplexError):
            bar_complex(load_fixture("triv").category, -1)


class TestBudget:
    """Tests for the basis budget."""

    def test_over_budget_raises(self) -> None:
        """Test that an oversized degree raises without truncation."""
        c = load_fixture("matrix2").category
        with pytest.raises(ResourceBudgetError) as exc:
            bar_complex(c, 3, max_basis_size=100)
        assert exc.value.degree == 3
        assert exc.value.dimension == 256

    def test_truncate(self) -> None:
        """Test that truncation stops the complex and marks the result."""
        c = load_fixture("matrix2").category
        cx = bar_complex(c, 3, max_basis_size=100, truncate=True)
        assert cx.truncated
        result = homology(cx)
        assert result.truncated
        assert result.dimensions == (1, 0)

    def test_low_degrees_never_truncate(self) -> None:
        """Test that degree 1 over budget raises even with truncation."""
        c = load_fixture("matrix2").category
        with pytest.raises(ResourceBudgetError):
            bar_complex(c, 3, max_basis_size=10, truncate=True)

    def test_count_cycles(self) -> None:
        """Test that counting matches enumeration."""
        c = load_fixture("swap").category
        cx = bar_complex(c, 2)
        assert tuple(count_cycles(c, n) for n in range(4)) == cx.dimensions


class TestCoinvariants:
    """Tests for the coinvariant complex and G-actions on homology."""

    def test_sign_coinvariants(self) -> None:
        """Test that only weight-even chains survive t ↦ −t."""
        doc = load_fixture("sign")
        base = attach_g_action(bar_complex(doc.category, 3), doc.action)
        co = coinvariant_complex(base)
        assert co.dimensions[:3] == (1, 2, 4)
        assert homology(co).dimensions == (1, 0, 0, 0)

    def test_action_on_homology(self) -> None:
        """Test that G acts on HH_0 = k[t]/(t^2) with one-dimensional coinvariants."""
        doc = load_fixture("sign")
        base = attach_g_action(bar_complex(doc.category, 1), doc.action)
        rep = homology_representation(base, 0)
        assert rep.dimension == 2
        assert coinvariants(rep).dimension == 1

    def test_requires_action(self) -> None:
        """Test that a complex without an action has no coinvariants."""
        with pytest.raises(ComplexError):
            coinvariant_complex(bar_complex(load_fixture("triv").category, 1))


class TestClassDecomposition:
    """Tests for the conjugacy class splitting of graded complexes."""

    def test_group_algebra(self) -> None:
        """Test that k[C2] splits into two classes with homology k each."""
        doc = load_fixture("triv")
        skew = skew_category(doc.action)
        cx = bar_complex(skew.category, 2, grading=skew.grading)
        dec = class_decomposition(cx, skew.grading)
        assert dec.ok
        per_class = class_homology(dec, skew.grading)
        assert per_class["{1}"].dimensions == (1, 0, 0)
        assert per_class["{s}"].dimensions == (1, 0, 0)
        assert check_class_sum(homology(cx), per_class) == []

    def test_quotient_classes(self) -> None:
        """Test that class {1} of C/G for the swap is the even part of k[t]/(t^2)."""
        doc = load_fixture("swap")
        q = quotient_category(doc.action)
        cx = bar_complex(q.category, 3, grading=q.grading)
        dec = class_decomposition(cx, q.grading)
        assert homology(dec.blocks[0]).dimensions == (1, 0, 0, 0)
        assert homology(dec.blocks[1]).dimensions == (1, 1, 1, 1)
        assert dec.total_dimensions() == cx.dimensions

    def test_single_class_filter(self) -> None:
        """Test that conjugacy_class keeps only chains of that class."""
        doc = load_fixture("swap")
        q = quotient_category(doc.action)
        full = class_decomposition(bar_complex(q.category, 2, grading=q.grading), q.grading)
        one = bar_complex(q.category, 2, grading=q.grading, conjugacy_class=0)
        assert one.dimensions == full.blocks[0].dimensions

    def test_class_filter_needs_grading(self) -> None:
        """Test that a class filter without a grading is refused."""
        with pytest.raises(ComplexError):
            bar_complex(load_fixture("triv").category, 1, conjugacy_class=0)


class TestHomologyTransfer:
    """Tests for the inverse chain maps A and B."""

    def test_swap(self) -> None:
        """Test that A and B are inverse chain maps for the swap action."""
        doc = load_fixture("swap")
        transfer = transfer_maps_homology(doc.action, 3)
        assert transfer.failures() == []
        assert homology(transfer.source).dimensions == homology(transfer.target).dimensions == (1, 0, 0, 0)

    def test_regular_s3(self) -> None:
        """Test the transfer for S3 acting freely on six points."""
        doc = load_fixture("s3-regular")
        transfer = transfer_maps_homology(doc.action, 2)
        assert transfer.failures() == []
        assert homology(transfer.target).dimensions == (1, 0, 0)
