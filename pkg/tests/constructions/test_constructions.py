"""Tests for skew, quotient, resolving and transversal categories."""

import pytest

from hmcat.cohomology.classes import class_cohomology, class_decomposition_cochains
from hmcat.cohomology.cochains import cochain_complex
from hmcat.constructions.grading import Grading, validate_grading
from hmcat.constructions.matrix_algebra import matrix_skew_algebra
from hmcat.constructions.quotient import grading_from_transversal, quotient_category
from hmcat.constructions.resolving import resolving_category
from hmcat.constructions.skew import check_orbit_isomorphisms, skew_category
from hmcat.constructions.tensor import tensor_action, trivial_category
from hmcat.constructions.transversal import check_homogeneous_isomorphism, transversal_subcategory
from hmcat.errors import GradingError, NonFreeActionError
from hmcat.group.action import GroupAction, induced_algebra_action, validate_action
from hmcat.group.finite_group import cyclic_group
from hmcat.group.orbits import orbits_transversal
from hmcat.homology.chains import bar_complex
from hmcat.homology.classes import class_decomposition, class_homology
from hmcat.io import Document
from hmcat.lincat.algebra import single_object_category, total_algebra, truncated_polynomial
from hmcat.lincat.scalars import Field
from hmcat.lincat.validation import validate_category
from hmcat.verify.fixtures import load_fixture


@pytest.fixture
def swap() -> Document:
    return load_fixture("swap")


@pytest.fixture
def sign() -> Document:
    return load_fixture("sign")


class TestGrading:
    """Tests for gradings and their validation."""

    def test_from_labels(self, sign: Document) -> None:
        """Test that t in degree s grades k[t]/(t^2)."""
        g = Grading.from_labels(sign.group, sign.category, {"t": "s"})
        assert g.labels() == {"1": "1", "t": "s"}
        assert validate_grading(g).ok
        assert not g.is_trivial

    def test_not_multiplicative(self) -> None:
        """Test that E12 alone in degree s is not a grading of M_2(k)."""
        doc = load_fixture("matrix2")
        g = Grading.from_labels(cyclic_group(2), doc.category, {"E12": "s"})
        report = validate_grading(g)
        assert not report.ok
        assert report.violations[0].kind == "multiplicative"

    def test_unknown_label(self, sign: Document) -> None:
        """Test that grading an unknown label raises GradingError."""
        with pytest.raises(GradingError):
            Grading.from_labels(sign.group, sign.category, {"u": "s"})

    def test_wrong_length(self, sign: Document) -> None:
        """Test that a degree list must cover the basis."""
        with pytest.raises(GradingError):
            Grading(sign.category, sign.group, (0,))


class TestSkewCategory:
    """Tests for C[G]."""

    def test_swap_skew(self, swap: Document) -> None:
        """Test that C[G] has dimension |G|·dim C and is a valid graded category."""
        s = skew_category(swap.action)
        assert s.category.dimension == 8
        assert validate_category(s.category).ok
        assert validate_grading(s.grading).ok

    def test_orbit_isomorphisms(self, swap: Document) -> None:
        """Test that x ≅ s·x in C[G]."""
        assert check_orbit_isomorphisms(skew_category(swap.action)).ok

    def test_trivial_action_gives_group_algebra(self) -> None:
        """Test that k[G] for the trivial action is commutative of dimension |G|."""
        doc = load_fixture("triv")
        s = skew_category(doc.action)
        assert s.category.dimension == 2
        a = total_algebra(s.category)
        assert all(a.table.get((i, j)) == a.table.get((j, i)) for i in range(2) for j in range(2))

    def test_component(self, sign: Document) -> None:
        """Test splitting a C[G] vector by degree."""
        s = skew_category(sign.action)
        f = sign.category.field
        t = sign.category.label_index["t"]
        vec = s.embed(0, 1, {t: f.one})
        assert s.component(vec) == {1: {t: f.one}}


class TestQuotientCategory:
    """Tests for C/G."""

    def test_swap_quotient_is_dual_numbers(self, swap: Document) -> None:
        """Test that C/G for the swap is k[t]/(t^2)."""
        q = quotient_category(swap.action)
        assert q.category.objects == ("[x]",)
        assert total_algebra(q.category).same_table(truncated_polynomial(Field(5), 2))
        assert q.hom_dimension_mismatches() == []
        assert validate_grading(q.grading).ok

    def test_projection_is_a_functor(self, swap: Document) -> None:
        """Test that C → C/G sends both objects to the one orbit faithfully."""
        q = quotient_category(swap.action)
        assert q.projection.object_map == (0, 0)
        assert q.projection.is_faithful

    def test_non_free(self, sign: Document) -> None:
        """Test that a non-free action has no quotient."""
        with pytest.raises(NonFreeActionError):
            quotient_category(sign.action)

    def test_grading_from_transversal(self, swap: Document) -> None:
        """Test that the reported transversal follows the preferred object."""
        grading, transversal = grading_from_transversal(swap.action, orbits_transversal(swap.action, ["y"]))
        assert transversal == ("y",)
        assert validate_grading(grading).ok

    def test_class_dimensions_ignore_transversal(self) -> None:
        """Test that per-class HH_* and HH^* of C/G agree for two transversals."""
        action = load_fixture("s3-regular").action

        def dims(preferred):
            q = quotient_category(action, orbits_transversal(action, preferred))
            chains = class_decomposition(bar_complex(q.category, 2, grading=q.grading), q.grading)
            cochains = class_decomposition_cochains(cochain_complex(q.category, 2, grading=q.grading), q.grading)
            return (
                {k: r.dimensions for k, r in class_homology(chains, q.grading).items()},
                {k: r.dimensions for k, r in class_cohomology(cochains, q.grading).items()},
            )

        default, other = dims(None), dims(["321"])
        assert default == other
        assert default[0]["{123}"] == (1, 0, 0)


class TestResolvingCategory:
    """Tests for M_G(C)."""

    def test_sign_resolving(self, sign: Document) -> None:
        """Test that M_G(C) has |G|·|C₀| objects and a free action."""
        m = resolving_category(sign.action)
        assert len(m.category.objects) == 2
        assert m.category.dimension == 8
        assert validate_category(m.category).ok
        assert validate_action(m.action).ok
        assert m.action.is_free

    def test_functor_is_full_and_faithful(self, sign: Document) -> None:
        """Test that L: M_G(C) → C is full, faithful and onto objects."""
        m = resolving_category(sign.action)
        assert m.functor.is_full
        assert m.functor.is_faithful
        assert m.functor.is_surjective_on_objects

    def test_trivial_category(self) -> None:
        """Test that M_{C2}(k) is M_2(k) up to basis order."""
        k1 = trivial_category(Field(5))
        m = resolving_category(GroupAction.trivial(cyclic_group(2), k1))
        assert m.category.dimension == 4
        assert len(m.category.objects) == 2


class TestTransversalSubcategory:
    """Tests for C_T[G]."""

    def test_swap_transversal(self, swap: Document) -> None:
        """Test that C_T[G] ⊂ C[G] is an equivalence and isomorphic to C/G."""
        orbits = orbits_transversal(swap.action, swap.transversal)
        ts = transversal_subcategory(skew_category(swap.action), orbits)
        assert ts.category.dimension == 2
        assert ts.is_equivalence
        assert check_homogeneous_isomorphism(ts).ok

    def test_non_free_has_no_isomorphism(self, sign: Document) -> None:
        """Test that C_T[G] exists for a non-free action but has no C/G partner."""
        ts = transversal_subcategory(skew_category(sign.action), orbits_transversal(sign.action))
        assert ts.quotient is None
        assert ts.is_equivalence


class TestMatrixSkewAlgebra:
    """Tests for M_G(Λ) and tensor actions."""

    def test_matches_resolving_category(self, sign: Document) -> None:
        """Test that a(M_G(Λ₁)) = M_G(Λ) with a free action on idempotents."""
        action = induced_algebra_action(sign.action)
        ms = matrix_skew_algebra(action)
        assert ms.algebra.dimension == 8
        assert ms.acts_freely_on_idempotents
        lam1 = single_object_category(action.algebra)
        m = resolving_category(action.on_single_object(lam1))
        assert total_algebra(m.category).same_table(ms.algebra)

    def test_tensor_action(self, swap: Document, sign: Document) -> None:
        """Test that the diagonal action on C ⊗ D is an action."""
        a = tensor_action(swap.action, sign.action)
        assert a.category.dimension == 8
        assert validate_action(a).ok
        assert a.is_free
