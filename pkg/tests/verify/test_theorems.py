"""Tests for the theorem checks and their registry."""

import pytest

from hmcat.config import ComputeProfile
from hmcat.errors import NonFreeActionError
from hmcat.group.action import induced_algebra_action
from hmcat.lincat.scalars import Field
from hmcat.verify.checks import default_registry
from hmcat.verify.fixtures import load_fixture
from hmcat.verify.random_categories import random_documents
from hmcat.verify.report import Hypothesis, Verdict
from hmcat.verify.theorems import (
    graded_categories,
    verify_closed_forms,
    verify_galois,
    verify_graded_decomposition,
    verify_skew_cohomology,
    verify_skew_group_algebra,
    verify_skew_homology,
)


@pytest.fixture
def profile() -> ComputeProfile:
    return ComputeProfile.quick()


class TestTheorems:
    """Tests for the verify_* functions on small fixtures."""

    @pytest.mark.parametrize("name", ["triv", "swap", "sign"])
    def test_graded_decomposition(self, name: str, profile: ComputeProfile) -> None:
        """Test that every graded category of a fixture splits by classes."""
        doc = load_fixture(name)
        report = verify_graded_decomposition(graded_categories(doc, profile), 2, profile, fixture=name)
        assert report.verdict is Verdict.VERIFIED

    @pytest.mark.parametrize("name", ["swap", "sign", "discrete-swap"])
    def test_skew_homology(self, name: str, profile: ComputeProfile) -> None:
        """Test HH^{1}_*(C[G]) against coinvariants for free and non-free actions."""
        report = verify_skew_homology(load_fixture(name).action, 2, profile, fixture=name)
        assert report.verdict is Verdict.VERIFIED, report.witnesses()

    def test_non_free_route_is_recorded(self, profile: ComputeProfile) -> None:
        """Test that a non-free action notes the detour through M_G(C)."""
        report = verify_skew_homology(load_fixture("sign").action, 1, profile)
        assert report.hypotheses[Hypothesis.FREE] is False
        assert any("M_G(C)" in note for note in report.routing)

    @pytest.mark.parametrize("name", ["swap", "sign"])
    def test_skew_cohomology(self, name: str, profile: ComputeProfile) -> None:
        """Test HH^*_{1}(C[G]) against invariants with cup products."""
        report = verify_skew_cohomology(load_fixture(name).action, 2, profile, fixture=name)
        assert report.verdict is Verdict.VERIFIED, report.witnesses()

    def test_galois(self, profile: ComputeProfile) -> None:
        """Test the Galois covering for the swap."""
        report = verify_galois(load_fixture("swap").action, 2, profile, fixture="swap")
        assert report.verdict is Verdict.VERIFIED, report.witnesses()

    def test_galois_needs_free_action(self, profile: ComputeProfile) -> None:
        """Test that a non-free action raises NonFreeActionError."""
        with pytest.raises(NonFreeActionError):
            verify_galois(load_fixture("sign").action, 2, profile)

    def test_skew_group_algebra(self, profile: ComputeProfile) -> None:
        """Test HH^*_{1}(Λ[G]) = HH^*(Λ)^G for Λ = k[t]/(t^2)."""
        action = induced_algebra_action(load_fixture("sign").action)
        report = verify_skew_group_algebra(action.algebra, action, 2, profile, fixture="sign")
        assert report.verdict is Verdict.VERIFIED, report.witnesses()

    @pytest.mark.parametrize("field", [Field(5), Field(2), Field(0)])
    def test_closed_forms(self, field: Field, profile: ComputeProfile) -> None:
        """Test HH of k and M_2(k) over several fields."""
        report = verify_closed_forms(field, 2, profile)
        assert report.verdict is Verdict.VERIFIED
        assert report.field == field.name

    @pytest.mark.parametrize("check", [verify_skew_homology, verify_skew_cohomology])
    def test_sign_in_characteristic_two(self, check, profile: ComputeProfile) -> None:
        """Test that t ↦ −t over F2 leaves only the unconditioned rows to hold."""
        report = check(load_fixture("sign", Field(2)).action, 3, profile, fixture="sign")
        assert report.verdict is Verdict.HYPOTHESIS_NOT_MET
        assert report.unmet() == [Hypothesis.ORDER_INVERTIBLE]
        unconditioned = [row for row in report.rows if not row.requires]
        assert unconditioned
        assert all(row.holds for row in unconditioned), report.witnesses()


class TestRandomInstances:
    """Tests for theorem checks on seeded random categories."""

    @pytest.mark.slow
    def test_hundred_instances(self, profile: ComputeProfile) -> None:
        """Test that 100 random categories verify every applicable check."""
        failures = []
        for doc in random_documents(11, 100, Field(5)):
            reports = [
                verify_graded_decomposition(graded_categories(doc, profile), 2, profile, fixture=doc.name),
                verify_skew_homology(doc.action, 2, profile, fixture=doc.name),
                verify_skew_cohomology(doc.action, 2, profile, fixture=doc.name),
            ]
            failures.extend((r.theorem, doc.name) for r in reports if r.verdict is not Verdict.VERIFIED)
        assert failures == []


class TestRegistry:
    """Tests for CheckRegistry dispatch."""

    @pytest.fixture
    def registry(self):
        return default_registry()

    def test_ids(self, registry) -> None:
        """Test that every theorem is registered."""
        assert set(registry.ids()) == {
            "graded-decomposition",
            "skew-homology",
            "skew-cohomology",
            "galois",
            "skew-group-algebra",
            "closed-forms",
        }
        assert "galois" in registry
        assert len(registry) == 6

    def test_non_free_galois(self, registry, profile: ComputeProfile) -> None:
        """Test that galois on a non-free action reports hypothesis-not-met."""
        report = registry.dispatch("galois", load_fixture("sign"), profile, "sign")
        assert report.verdict is Verdict.HYPOTHESIS_NOT_MET
        assert report.unmet() == [Hypothesis.FREE]
        assert report.routing

    def test_unknown_theorem(self, registry, profile: ComputeProfile) -> None:
        """Test that an unknown id becomes a FAILED report."""
        report = registry.dispatch("nope", None, profile)
        assert report.verdict is Verdict.FAILED
        assert "Unknown theorem" in report.error

    def test_document_required(self, registry, profile: ComputeProfile) -> None:
        """Test that document-based checks refuse to run without one."""
        report = registry.dispatch("galois", None, profile)
        assert report.verdict is Verdict.FAILED
        assert "needs a document" in report.error

    def test_closed_forms_without_document(self, registry, profile: ComputeProfile) -> None:
        """Test that closed-forms runs on the profile's field."""
        report = registry.dispatch("closed-forms", None, profile)
        assert report.verdict is Verdict.VERIFIED
        assert report.field == "F5"

    def test_default_fixtures_exist(self, registry) -> None:
        """Test that every default fixture is packaged."""
        for theorem in registry.ids():
            for name in registry.get(theorem).default_fixtures:
                assert load_fixture(name).name
