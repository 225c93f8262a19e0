"""The registered theorem checks.

Each check adapts a document to the inputs of one verify_* function:

- graded-decomposition: every graded category the document gives rise to
- skew-homology / skew-cohomology: the document's action
- galois: the document's action, which must be free
- skew-group-algebra: the total algebra a(C) with the induced action
- closed-forms: no document; HH of k and of M_{C2}(k₁)
"""

from ..config import ComputeProfile
from ..group.action import induced_algebra_action
from ..io import Document
from ..lincat.algebra import total_algebra
from .base import TheoremCheck
from .fixtures import acting
from .registry import CheckRegistry
from .report import TheoremReport
from .theorems import (
    graded_categories,
    verify_closed_forms,
    verify_galois,
    verify_graded_decomposition,
    verify_skew_cohomology,
    verify_skew_group_algebra,
    verify_skew_homology,
)


class GradedDecompositionCheck(TheoremCheck):
    @property
    def name(self) -> str:
        return "graded-decomposition"

    @property
    def description(self) -> str:
        return "(Co)chains of a graded category split by conjugacy classes"

    @property
    def default_fixtures(self) -> tuple[str, ...]:
        return ("triv", "swap", "sign", "discrete-swap", "matrix2")

    def run(self, doc: Document | None, profile: ComputeProfile, fixture: str = "") -> TheoremReport:
        return verify_graded_decomposition(
            graded_categories(doc, profile), profile.max_degree, profile, fixture=fixture
        )


class SkewHomologyCheck(TheoremCheck):
    @property
    def name(self) -> str:
        return "skew-homology"

    @property
    def description(self) -> str:
        return "HH^{1}_*(C[G]) against the homology of the coinvariant complex"

    @property
    def default_fixtures(self) -> tuple[str, ...]:
        return ("triv", "swap", "sign", "discrete-swap", "s3-regular")

    def run(self, doc: Document | None, profile: ComputeProfile, fixture: str = "") -> TheoremReport:
        return verify_skew_homology(
            acting(doc), profile.max_degree, profile, fixture=fixture, transversal=doc.transversal
        )


class SkewCohomologyCheck(TheoremCheck):
    @property
    def name(self) -> str:
        return "skew-cohomology"

    @property
    def description(self) -> str:
        return "HH^*_{1}(C[G]) against the cohomology of the invariant complex, with cup products"

    @property
    def default_fixtures(self) -> tuple[str, ...]:
        return ("triv", "swap", "sign", "discrete-swap", "s3-regular")

    def run(self, doc: Document | None, profile: ComputeProfile, fixture: str = "") -> TheoremReport:
        return verify_skew_cohomology(
            acting(doc), profile.max_degree, profile, fixture=fixture, transversal=doc.transversal
        )


class GaloisCheck(TheoremCheck):
    @property
    def name(self) -> str:
        return "galois"

    @property
    def description(self) -> str:
        return "Galois covering C → C/G: class {1} of C/G and the split injection HH^*(C)^G → HH^*(C/G)"

    @property
    def default_fixtures(self) -> tuple[str, ...]:
        return ("swap", "discrete-swap", "s3-regular", "triv")

    def run(self, doc: Document | None, profile: ComputeProfile, fixture: str = "") -> TheoremReport:
        return verify_galois(acting(doc), profile.max_degree, profile, fixture=fixture, transversal=doc.transversal)


class SkewGroupAlgebraCheck(TheoremCheck):
    @property
    def name(self) -> str:
        return "skew-group-algebra"

    @property
    def description(self) -> str:
        return "HH^*_{1}(Λ[G]) = HH^*(Λ)^G for Λ = a(C), through M_G(Λ₁)"

    @property
    def default_fixtures(self) -> tuple[str, ...]:
        return ("sign", "triv")

    def run(self, doc: Document | None, profile: ComputeProfile, fixture: str = "") -> TheoremReport:
        action = induced_algebra_action(acting(doc))
        return verify_skew_group_algebra(action.algebra, action, profile.max_degree, profile, fixture=fixture)


class ClosedFormsCheck(TheoremCheck):
    @property
    def name(self) -> str:
        return "closed-forms"

    @property
    def description(self) -> str:
        return "HH of k and of M_{C2}(k₁) ≅ M_2(k) against their known values"

    @property
    def needs_document(self) -> bool:
        return False

    def run(self, doc: Document | None, profile: ComputeProfile, fixture: str = "") -> TheoremReport:
        field = doc.category.field if doc is not None else profile.base_field
        return verify_closed_forms(field, profile.max_degree, profile)


def default_registry() -> CheckRegistry:
    registry = CheckRegistry()
    for check in (
        GradedDecompositionCheck(),
        SkewHomologyCheck(),
        SkewCohomologyCheck(),
        GaloisCheck(),
        SkewGroupAlgebraCheck(),
        ClosedFormsCheck(),
    ):
        registry.register(check)
    return registry
