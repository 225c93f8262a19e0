"""Theorem checks: compute both sides of each isomorphism and compare them.

Every check returns a TheoremReport. Dimension rows compare degree by
degree up to the profile's degree bound; check rows collect the failures
of an identity that should hold exactly (chain maps, inverse pairs,
multiplicativity). Complexes are built with the profile's basis budget
and truncate instead of raising, and rows record the truncation.
"""

import logging
from typing import Sequence

from ..cohomology.classes import class_cohomology, class_decomposition_cochains, class_inclusion, class_projection
from ..cohomology.cochains import CochainComplex, coboundary_failures, cochain_complex
from ..cohomology.cup import basis_pairs, cup
from ..cohomology.invariants import attach_g_action_cochains, invariant_complex, invariant_cup_failures
from ..cohomology.ranks import cohomology, cohomology_representation
from ..cohomology.transfer import transfer_maps_cohomology
from ..cohomology.transport import transport_cochains
from ..config import ComputeProfile, TransversalMode
from ..constructions.grading import Grading, validate_grading
from ..constructions.matrix_algebra import matrix_skew_algebra
from ..constructions.quotient import quotient_category
from ..constructions.resolving import resolving_category
from ..constructions.skew import skew_category
from ..constructions.tensor import trivial_category
from ..constructions.transversal import check_homogeneous_isomorphism, transversal_subcategory
from ..group.action import AlgebraAction, GroupAction, validate_action
from ..group.finite_group import cyclic_group, trivial_group
from ..group.orbits import OrbitData, orbits_transversal
from ..group.representations import coinvariants, invariants
from ..homology.chains import ChainComplex, attach_g_action, bar_complex, boundary_failures
from ..homology.classes import class_decomposition, class_homology
from ..homology.coinvariants import coinvariant_complex
from ..homology.ranks import homology, homology_representation
from ..homology.transfer import transfer_maps_homology
from ..io import Document
from ..lincat.algebra import AlgebraView, matrix_algebra, single_object_category, total_algebra
from ..lincat.category import LinCat
from ..lincat.matrices import apply, is_identity, matmul
from ..lincat.scalars import Field
from .oracle import Oracle, skew_group_table
from .report import ComparisonRow, Hypothesis, TheoremReport

logger = logging.getLogger(__name__)

ORDER_INVERTIBLE = (Hypothesis.ORDER_INVERTIBLE,)
NON_FREE_ROUTE = "non-free action: routed through the resolving category M_G(C)"

GradedCategory = tuple[str, LinCat, Grading]


# Shared pieces


def _report(theorem: str, fixture: str, field: Field, max_degree: int) -> TheoremReport:
    return TheoremReport(theorem, fixture, field=field.name, max_degree=max_degree)


def _hypotheses(a: GroupAction) -> dict[Hypothesis, bool]:
    return {
        Hypothesis.FREE: a.is_free,
        Hypothesis.ORDER_INVERTIBLE: a.category.field.is_unit(a.group.order),
    }


def _action_is_valid(report: TheoremReport, a: GroupAction) -> bool:
    validation = validate_action(a)
    report.add(ComparisonRow.check("G acts on C by k-linear functors", [v.message for v in validation.violations]))
    return validation.ok


def _orbits(a: GroupAction, profile: ComputeProfile, transversal: Sequence[str] | None) -> OrbitData:
    preferred = transversal if profile.transversal is TransversalMode.PREFERRED else None
    return orbits_transversal(a, preferred)


def _chains(c: LinCat, max_degree: int, profile: ComputeProfile, **kwargs) -> ChainComplex:
    return bar_complex(c, max_degree, max_basis_size=profile.max_basis_size, truncate=True, **kwargs)


def _cochains(c: LinCat, max_degree: int, profile: ComputeProfile, **kwargs) -> CochainComplex:
    return cochain_complex(
        c, max_degree, sign=profile.coboundary_sign, max_basis_size=profile.max_basis_size, truncate=True, **kwargs
    )


def _h(cx: ChainComplex, profile: ComputeProfile) -> tuple[int, ...]:
    return homology(cx, profile.dense_threshold).dimensions


def _hc(cx: CochainComplex, profile: ComputeProfile) -> tuple[int, ...]:
    return cohomology(cx, profile.dense_threshold).dimensions


def _coinvariant_dims(base: ChainComplex, profile: ComputeProfile) -> tuple[int, ...]:
    """dim (H_n)_G for a complex carrying its G-action."""
    dt = profile.dense_threshold
    return tuple(coinvariants(homology_representation(base, n, dt), dt).dimension for n in range(base.max_degree + 1))


def _invariant_dims(base: CochainComplex, profile: ComputeProfile) -> tuple[int, ...]:
    dt = profile.dense_threshold
    return tuple(invariants(cohomology_representation(base, n, dt), dt).dimension for n in range(base.max_degree + 1))


def _skew_class_one(a: GroupAction, max_degree: int, profile: ComputeProfile, cochains: bool = False):
    """The {1}-block of the (co)chain complex of C[G]."""
    skew = skew_category(a, validate=False)
    build = _cochains if cochains else _chains
    return build(skew.category, max_degree, profile, grading=skew.grading, conjugacy_class=0)


# Graded decomposition


def graded_categories(doc: Document, profile: ComputeProfile | None = None) -> list[GradedCategory]:
    """Every graded category a document gives rise to.

    The document's own grading, then C[G] and (for free actions) C/G with
    their induced gradings; a document with neither is trivially graded.
    """
    profile = profile or ComputeProfile.default()
    c = doc.category
    out: list[GradedCategory] = []
    if doc.grading is not None:
        out.append(("C", c, doc.grading))
    if doc.action is not None:
        skew = skew_category(doc.action, validate=False)
        out.append(("C[G]", skew.category, skew.grading))
        if doc.action.is_free:
            q = quotient_category(doc.action, _orbits(doc.action, profile, doc.transversal), validate=False)
            out.append(("C/G", q.category, q.grading))
    if not out:
        out.append(("C", c, Grading.trivial(trivial_group(), c)))
    return out


def _trivial_class_cup_failures(parent: CochainComplex, block: CochainComplex, limit: int) -> list[str]:
    """Cup products of {1}-cochains with a component outside class {1}."""
    one = parent.field.one
    out = []
    for m, i, n, j in basis_pairs(block.dimensions, block.top, limit):
        product = cup(parent, m, apply(block.to_parent[m], {i: one}), n, apply(block.to_parent[n], {j: one}))
        if any(parent.class_of[m + n][k] != 0 for k in product):
            out.append(f"{parent.label(m, i)} ⌣ {parent.label(n, j)} leaves class {{1}}")
    return out


def _graded_rows(report: TheoremReport, label: str, b: LinCat, grading: Grading, profile: ComputeProfile) -> bool:
    n = report.max_degree
    needs = (Hypothesis.GRADING_VALID,)
    valid = validate_grading(grading)
    report.add(
        ComparisonRow.check(f"{label}: grading is multiplicative", [v.message for v in valid.violations], requires=needs)
    )

    cx = _chains(b, n, profile, grading=grading, check=False)
    report.add(ComparisonRow.check(f"{label}: d∘d = 0 on C_•", [f"d∘d ≠ 0 at degree {k}" for k in boundary_failures(cx)]))
    dec = class_decomposition(cx, grading, check=False)
    report.add(
        ComparisonRow.check(
            f"{label}: boundary preserves conjugacy classes",
            [f"d_{k} maps class {src} into class {dst}" for k, src, dst in dec.leaks],
            requires=needs,
        )
    )
    total = _h(cx, profile)
    per_class = class_homology(dec, grading, profile.dense_threshold)
    summed = tuple(sum(r.dimensions[k] for r in per_class.values()) for k in range(len(total)))
    report.add(
        ComparisonRow.dims(
            f"{label}: Σ_D dim HH^D_n = dim HH_n",
            summed,
            total,
            "class sum",
            "total",
            requires=needs,
            truncated=cx.truncated,
        )
    )

    co = _cochains(b, n, profile, grading=grading, check=False)
    report.add(
        ComparisonRow.check(f"{label}: d∘d = 0 on C^•", [f"d∘d ≠ 0 at degree {k}" for k in coboundary_failures(co)])
    )
    codec = class_decomposition_cochains(co, grading, check=False)
    report.add(
        ComparisonRow.check(
            f"{label}: coboundary preserves conjugacy classes",
            [f"d_{k} maps class {src} into class {dst}" for k, src, dst in codec.leaks],
            requires=needs,
        )
    )
    co_total = _hc(co, profile)
    co_class = class_cohomology(codec, grading, profile.dense_threshold)
    co_summed = tuple(sum(r.dimensions[k] for r in co_class.values()) for k in range(len(co_total)))
    report.add(
        ComparisonRow.dims(
            f"{label}: Σ_D dim HH^n_D = dim HH^n",
            co_summed,
            co_total,
            "class sum",
            "total",
            requires=needs,
            truncated=co.truncated,
        )
    )
    cup_failures = (
        _trivial_class_cup_failures(co, codec.blocks[0], profile.cup_check_limit) if codec.ok else ["no class blocks"]
    )
    report.add(ComparisonRow.check(f"{label}: class {{1}} is closed under ⌣", cup_failures, requires=needs))
    return valid.ok


def verify_graded_decomposition(
    graded: Sequence[GradedCategory],
    max_degree: int,
    profile: ComputeProfile | None = None,
    *,
    fixture: str = "",
) -> TheoremReport:
    """C_•(B) and C^•(B) split into conjugacy-class blocks with matching (co)homology."""
    profile = profile or ComputeProfile.default()
    field = graded[0][1].field
    report = _report("graded-decomposition", fixture, field, max_degree)
    valid = True
    for label, b, grading in graded:
        logger.debug(f"graded decomposition of {label} ({b.dimension} basis morphisms)")
        valid = _graded_rows(report, label, b, grading, profile) and valid
    report.hypotheses = {Hypothesis.GRADING_VALID: valid}
    report.required = (Hypothesis.GRADING_VALID,)
    return report


# Skew category homology


def _free_homology_route(
    report: TheoremReport, a: GroupAction, orbits: OrbitData, profile: ComputeProfile, name: str
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Rows for a free action; returns dim HH^{1}_n(name[G]) and dim H_n((C_•(name))_G)."""
    n = report.max_degree
    transfer = transfer_maps_homology(a, n, orbits, max_basis_size=profile.max_basis_size, truncate=True)
    report.add(ComparisonRow.check(f"A, B are inverse chain maps (C_•({name}))_G ⇄ C^{{1}}_•({name}_T[G])", transfer.failures()))
    coinvariant = _h(transfer.source, profile)
    report.add(
        ComparisonRow.dims(
            f"dim H_n(C^{{1}}_•({name}_T[G])) = dim H_n((C_•({name}))_G)",
            _h(transfer.target, profile),
            coinvariant,
            "transversal",
            "coinvariants",
            truncated=transfer.source.truncated,
        )
    )
    sk = _skew_class_one(a, n, profile)
    skew = _h(sk, profile)
    report.add(
        ComparisonRow.dims(
            f"dim HH^{{1}}_n({name}[G]) = dim H_n((C_•({name}))_G)",
            skew,
            coinvariant,
            "skew class {1}",
            "coinvariants",
            truncated=sk.truncated or transfer.source.truncated,
        )
    )
    return skew, coinvariant


def verify_skew_homology(
    a: GroupAction,
    max_degree: int,
    profile: ComputeProfile | None = None,
    *,
    fixture: str = "",
    transversal: Sequence[str] | None = None,
) -> TheoremReport:
    """HH^{1}_•(C[G]) against the coinvariant complex (C_•(C))_G.

    Free actions compare through the transversal subcategory. Otherwise the
    comparison runs on M_G(C), where the action is free, and is carried
    back to C.
    """
    profile = profile or ComputeProfile.default()
    c = a.category
    report = _report("skew-homology", fixture, c.field, max_degree)
    report.hypotheses = _hypotheses(a)
    if not _action_is_valid(report, a):
        return report

    base = attach_g_action(_chains(c, max_degree, profile), a)
    if a.is_free:
        skew, coinvariant = _free_homology_route(report, a, _orbits(a, profile, transversal), profile, "C")
        truncated = base.truncated
    else:
        report.routing.append(NON_FREE_ROUTE)
        logger.info(f"skew-homology on {fixture or c.name}: {NON_FREE_ROUTE}")
        m = resolving_category(a, validate=False)
        m_skew, m_coinvariant = _free_homology_route(report, m.action, orbits_transversal(m.action), profile, "M_G(C)")
        m_chains = _chains(m.category, max_degree, profile)
        report.add(
            ComparisonRow.dims(
                "dim H_n(C_•(M_G(C))) = dim H_n(C_•(C))",
                _h(m_chains, profile),
                _h(base, profile),
                "M_G(C)",
                "C",
                truncated=m_chains.truncated or base.truncated,
            )
        )
        sk = _skew_class_one(a, max_degree, profile)
        skew = _h(sk, profile)
        truncated = sk.truncated or base.truncated
        report.add(
            ComparisonRow.dims(
                "dim HH^{1}_n(M_G(C)[G]) = dim HH^{1}_n(C[G])",
                m_skew,
                skew,
                "M_G(C)[G]",
                "C[G]",
                truncated=truncated,
            )
        )
        coinvariant = _h(coinvariant_complex(base, profile.dense_threshold), profile)
        report.add(
            ComparisonRow.dims(
                "dim H_n((C_•(M_G(C)))_G) = dim H_n((C_•(C))_G)",
                m_coinvariant,
                coinvariant,
                "M_G(C)",
                "C",
                requires=ORDER_INVERTIBLE,
                truncated=truncated,
            )
        )
        report.add(
            ComparisonRow.dims(
                "dim HH^{1}_n(C[G]) = dim H_n((C_•(C))_G)",
                skew,
                coinvariant,
                "skew class {1}",
                "coinvariants",
                requires=ORDER_INVERTIBLE,
                truncated=truncated,
            )
        )
    report.add(
        ComparisonRow.dims(
            "dim HH^{1}_n(C[G]) = dim HH_n(C)_G",
            skew,
            _coinvariant_dims(base, profile),
            "skew class {1}",
            "coinvariants of homology",
            requires=ORDER_INVERTIBLE,
            truncated=truncated,
        )
    )
    return report


# Skew category cohomology


def _free_cohomology_route(
    report: TheoremReport, a: GroupAction, orbits: OrbitData, profile: ComputeProfile, name: str
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Rows for a free action; returns dim HH^n_{1}(name[G]) and dim H^n(C^•(name)^G)."""
    n = report.max_degree
    transfer = transfer_maps_cohomology(
        a, n, orbits, sign=profile.coboundary_sign, max_basis_size=profile.max_basis_size, truncate=True
    )
    report.add(ComparisonRow.check(f"A, B are inverse cochain maps C^•({name})^G ⇄ C^•_{{1}}({name}_T[G])", transfer.failures()))
    report.add(
        ComparisonRow.check(f"A is multiplicative on C^•({name})^G", transfer.multiplicativity_failures(profile.cup_check_limit))
    )
    report.add(
        ComparisonRow.check(
            f"C^•({name})^G is closed under ⌣",
            invariant_cup_failures(transfer.base, transfer.source, profile.cup_check_limit),
        )
    )
    invariant = _hc(transfer.source, profile)
    report.add(
        ComparisonRow.dims(
            f"dim H^n(C^•_{{1}}({name}_T[G])) = dim H^n(C^•({name})^G)",
            _hc(transfer.target, profile),
            invariant,
            "transversal",
            "invariants",
            truncated=transfer.source.truncated,
        )
    )
    sk = _skew_class_one(a, n, profile, cochains=True)
    skew = _hc(sk, profile)
    report.add(
        ComparisonRow.dims(
            f"dim HH^n_{{1}}({name}[G]) = dim H^n(C^•({name})^G)",
            skew,
            invariant,
            "skew class {1}",
            "invariants",
            truncated=sk.truncated or transfer.source.truncated,
        )
    )
    return skew, invariant


def verify_skew_cohomology(
    a: GroupAction,
    max_degree: int,
    profile: ComputeProfile | None = None,
    *,
    fixture: str = "",
    transversal: Sequence[str] | None = None,
) -> TheoremReport:
    """HH^•_{1}(C[G]) against the invariant complex C^•(C)^G, with cup products."""
    profile = profile or ComputeProfile.default()
    c = a.category
    report = _report("skew-cohomology", fixture, c.field, max_degree)
    report.hypotheses = _hypotheses(a)
    if not _action_is_valid(report, a):
        return report

    base = attach_g_action_cochains(_cochains(c, max_degree, profile), a)
    if a.is_free:
        skew, invariant = _free_cohomology_route(report, a, _orbits(a, profile, transversal), profile, "C")
        truncated = base.truncated
    else:
        report.routing.append(NON_FREE_ROUTE)
        logger.info(f"skew-cohomology on {fixture or c.name}: {NON_FREE_ROUTE}")
        m = resolving_category(a, validate=False)
        m_skew, m_invariant = _free_cohomology_route(report, m.action, orbits_transversal(m.action), profile, "M_G(C)")
        m_base = attach_g_action_cochains(_cochains(m.category, max_degree, profile), m.action)
        transport = transport_cochains(m.functor, base, m_base)
        report.add(
            ComparisonRow.check(
                "C•L: C^•(C) → C^•(M_G(C)) is a cochain map",
                [f"C•L does not commute with d in degree {k}" for k in transport.cochain_map_failures()],
            )
        )
        report.add(
            ComparisonRow.check("C•L is multiplicative", transport.multiplicativity_failures(profile.cup_check_limit))
        )
        report.add(ComparisonRow.check("C•L is G-equivariant", transport.equivariance_failures()))
        report.add(
            ComparisonRow.dims(
                "dim H^n(C^•(M_G(C))) = dim H^n(C^•(C))",
                _hc(m_base, profile),
                _hc(base, profile),
                "M_G(C)",
                "C",
                truncated=m_base.truncated or base.truncated,
            )
        )
        sk = _skew_class_one(a, max_degree, profile, cochains=True)
        skew = _hc(sk, profile)
        truncated = sk.truncated or base.truncated
        report.add(
            ComparisonRow.dims(
                "dim HH^n_{1}(M_G(C)[G]) = dim HH^n_{1}(C[G])",
                m_skew,
                skew,
                "M_G(C)[G]",
                "C[G]",
                truncated=truncated,
            )
        )
        invariant = _hc(invariant_complex(base, profile.dense_threshold), profile)
        report.add(
            ComparisonRow.dims(
                "dim H^n(C^•(M_G(C))^G) = dim H^n(C^•(C)^G)",
                m_invariant,
                invariant,
                "M_G(C)",
                "C",
                requires=ORDER_INVERTIBLE,
                truncated=truncated,
            )
        )
        report.add(
            ComparisonRow.dims(
                "dim HH^n_{1}(C[G]) = dim H^n(C^•(C)^G)",
                skew,
                invariant,
                "skew class {1}",
                "invariants",
                requires=ORDER_INVERTIBLE,
                truncated=truncated,
            )
        )
    report.add(
        ComparisonRow.dims(
            "dim HH^n_{1}(C[G]) = dim HH^n(C)^G",
            skew,
            _invariant_dims(base, profile),
            "skew class {1}",
            "invariants of cohomology",
            requires=ORDER_INVERTIBLE,
            truncated=truncated,
        )
    )
    return report


# Galois coverings


def verify_galois(
    a: GroupAction,
    max_degree: int,
    profile: ComputeProfile | None = None,
    *,
    fixture: str = "",
    transversal: Sequence[str] | None = None,
) -> TheoremReport:
    """C → C/G for a free action: class {1} of C/G against (co)invariants of C.

    Raises:
        NonFreeActionError: If some object has a nontrivial stabilizer.
    """
    profile = profile or ComputeProfile.default()
    c, group = a.category, a.group
    n = max_degree
    dt = profile.dense_threshold
    report = _report("galois", fixture, c.field, max_degree)
    report.hypotheses = _hypotheses(a)
    report.required = (Hypothesis.FREE,)
    if not _action_is_valid(report, a):
        return report
    orbits = _orbits(a, profile, transversal)
    orbits.require_free(c.objects, group.order)

    q = quotient_category(a, orbits, validate=False)
    ts = transversal_subcategory(skew_category(a, validate=False), orbits)
    report.add(
        ComparisonRow.check(
            "C/G ≅ C_T[G] by a degree-preserving functor",
            [v.message for v in check_homogeneous_isomorphism(ts).violations],
        )
    )
    report.add(
        ComparisonRow.check(
            "hom spaces of C/G are the coinvariants of ⊕_s _yC_{s·x}",
            [f"orbit pair ({beta}, {alpha}) has the wrong dimension" for beta, alpha in q.hom_dimension_mismatches()],
        )
    )
    report.add(ComparisonRow.check("C/G grading is multiplicative", [v.message for v in validate_grading(q.grading).violations]))

    base = attach_g_action(_chains(c, n, profile), a)
    coinvariant = _h(coinvariant_complex(base, dt), profile)
    qx = _chains(q.category, n, profile, grading=q.grading)
    dec = class_decomposition(qx, q.grading)
    per_class = {k: homology(block, dt).dimensions for k, block in dec.blocks.items()}
    truncated = qx.truncated or base.truncated
    report.add(
        ComparisonRow.dims(
            "dim HH^{1}_n(C/G) = dim H_n((C_•(C))_G)",
            per_class[0],
            coinvariant,
            "C/G class {1}",
            "coinvariants",
            truncated=truncated,
        )
    )
    report.add(
        ComparisonRow.dims(
            "dim HH^{1}_n(C/G) = dim HH_n(C)_G",
            per_class[0],
            _coinvariant_dims(base, profile),
            "C/G class {1}",
            "coinvariants of homology",
            requires=ORDER_INVERTIBLE,
            truncated=truncated,
        )
    )
    total = _h(qx, profile)
    report.add(
        ComparisonRow.dims(
            "Σ_D dim HH^D_n(C/G) = dim HH_n(C/G)",
            tuple(sum(dims[k] for dims in per_class.values()) for k in range(len(total))),
            total,
            "class sum",
            "total",
            truncated=qx.truncated,
        )
    )

    co_base = attach_g_action_cochains(_cochains(c, n, profile), a)
    invariant = _hc(invariant_complex(co_base, dt), profile)
    qco = _cochains(q.category, n, profile, grading=q.grading)
    codec = class_decomposition_cochains(qco, q.grading)
    co_class = {k: cohomology(block, dt).dimensions for k, block in codec.blocks.items()}
    co_total = _hc(qco, profile)
    co_truncated = qco.truncated or co_base.truncated
    report.add(
        ComparisonRow.dims(
            "dim HH^n_{1}(C/G) = dim H^n(C^•(C)^G)",
            co_class[0],
            invariant,
            "C/G class {1}",
            "invariants",
            truncated=co_truncated,
        )
    )
    report.add(
        ComparisonRow.dims(
            "dim HH^n_{1}(C/G) = dim HH^n(C)^G",
            co_class[0],
            _invariant_dims(co_base, profile),
            "C/G class {1}",
            "invariants of cohomology",
            requires=ORDER_INVERTIBLE,
            truncated=co_truncated,
        )
    )
    report.add(
        ComparisonRow.dims(
            "dim H^n(C^•(C)^G) ≤ dim HH^n(C/G)",
            invariant,
            co_total,
            "invariants",
            "C/G total",
            relation="<=",
            truncated=co_truncated,
        )
    )
    others = tuple(sum(dims[k] for key, dims in co_class.items() if key != 0) for k in range(len(co_total)))
    report.add(
        ComparisonRow.dims(
            "dim HH^n(C/G) − dim HH^n_{1}(C/G) = Σ_{D≠{1}} dim HH^n_D(C/G)",
            tuple(t - one for t, one in zip(co_total, co_class[0])),
            others,
            "complement",
            "other classes",
            truncated=qco.truncated,
        )
    )
    projection, inclusion = class_projection(codec, 0), class_inclusion(codec, 0)
    report.add(
        ComparisonRow.check(
            "restriction to class {1} splits its inclusion",
            [f"restriction ∘ inclusion ≠ 1 in degree {k}" for k in range(qco.top + 1) if not is_identity(matmul(projection[k], inclusion[k]))],
        )
    )
    return report


# Skew group algebras


def verify_skew_group_algebra(
    lam: AlgebraView,
    action: AlgebraAction,
    max_degree: int,
    profile: ComputeProfile | None = None,
    *,
    fixture: str = "",
) -> TheoremReport:
    """HH^•_{1}(Λ[G]) ≅ HH^•(Λ)^G through Λ₁, M_G(Λ₁) and M_G(Λ).

    The brute-force oracle on Λ and Λ[G] runs first, within its size limit.
    """
    profile = profile or ComputeProfile.default()
    group, field = action.group, lam.field
    n = max_degree
    report = _report("skew-group-algebra", fixture, field, max_degree)
    report.hypotheses = {Hypothesis.ORDER_INVERTIBLE: field.is_unit(group.order)}
    report.required = ORDER_INVERTIBLE

    lam1 = single_object_category(lam)
    a1 = action.on_single_object(lam1)
    if not _action_is_valid(report, a1):
        return report
    c_lam = _cochains(lam1, n, profile)
    skew1 = skew_category(a1, validate=False)
    c_skew = _cochains(skew1.category, n, profile)

    limit = profile.max_basis_size
    oracle_lam = Oracle.of(lam, limit).cohomology(n)
    report.add(
        ComparisonRow.dims(
            "oracle: dim HH^n(Λ) = dim H^n(C^•(Λ₁))",
            oracle_lam,
            _hc(c_lam, profile),
            "oracle",
            "category",
            truncated=c_lam.truncated,
        )
    )
    size, table = skew_group_table(
        lam.dimension,
        lam.table,
        [[group.mul(s, t) for t in group.elements] for s in group.elements],
        [list(images) for images in action.images],
    )
    oracle_skew = Oracle(field.characteristic, size, table, limit).cohomology(n)
    report.add(
        ComparisonRow.dims(
            "oracle: dim HH^n(Λ[G]) = dim H^n(C^•(Λ₁[G]))",
            oracle_skew,
            _hc(c_skew, profile),
            "oracle",
            "category",
            truncated=c_skew.truncated,
        )
    )

    report.add(
        ComparisonRow.check(
            "Λ₁ has one object with endomorphism algebra Λ",
            [] if len(lam1.objects) == 1 and total_algebra(lam1).same_table(lam) else ["a(Λ₁) differs from Λ"],
        )
    )

    m = resolving_category(a1, validate=False)
    ms = matrix_skew_algebra(action, validate=False)
    failures = []
    if not m.action.is_free:
        failures.append("G does not act freely on the objects of M_G(Λ₁)")
    if not ms.acts_freely_on_idempotents:
        failures.append("G does not act freely on the idempotents E_{s,s}")
    if not total_algebra(m.category).same_table(ms.algebra):
        failures.append("a(M_G(Λ₁)) differs from M_G(Λ)")
    if ms.action.images != m.action.images:
        failures.append("the actions on a(M_G(Λ₁)) and M_G(Λ) differ")
    report.add(ComparisonRow.check("a(M_G(Λ₁)) = M_G(Λ) with G acting freely", failures))

    c_m = _cochains(m.category, n, profile)
    transport = transport_cochains(m.functor, c_lam, c_m)
    report.add(
        ComparisonRow.check(
            "C•L: C^•(Λ₁) → C^•(M_G(Λ₁)) is a cochain map",
            [f"C•L does not commute with d in degree {k}" for k in transport.cochain_map_failures()],
        )
    )
    report.add(
        ComparisonRow.dims(
            "dim HH^n(Λ₁) = dim HH^n(M_G(Λ₁))",
            _hc(c_lam, profile),
            _hc(c_m, profile),
            "Λ₁",
            "M_G(Λ₁)",
            truncated=c_lam.truncated or c_m.truncated,
        )
    )

    sk1 = _skew_class_one(a1, n, profile, cochains=True)
    skm = _skew_class_one(m.action, n, profile, cochains=True)
    skew_dims = _hc(sk1, profile)
    report.add(
        ComparisonRow.dims(
            "dim HH^n_{1}(Λ₁[G]) = dim HH^n_{1}(M_G(Λ₁)[G])",
            skew_dims,
            _hc(skm, profile),
            "Λ₁[G]",
            "M_G(Λ₁)[G]",
            truncated=sk1.truncated or skm.truncated,
        )
    )
    base = attach_g_action_cochains(c_lam, a1)
    report.add(
        ComparisonRow.dims(
            "dim HH^n_{1}(Λ[G]) = dim HH^n(Λ)^G",
            skew_dims,
            _invariant_dims(base, profile),
            "skew class {1}",
            "invariants of cohomology",
            requires=ORDER_INVERTIBLE,
            truncated=sk1.truncated or base.truncated,
        )
    )
    return report


# Closed forms


def verify_closed_forms(field: Field, max_degree: int, profile: ComputeProfile | None = None) -> TheoremReport:
    """HH of k and of M_G(k₁) ≅ M_2(k) against their known values."""
    profile = profile or ComputeProfile.default()
    n = max_degree
    report = _report("closed-forms", "k", field, max_degree)
    point = (1,) + (0,) * n
    k1 = trivial_category(field)

    chains = _chains(k1, n, profile)
    report.add(ComparisonRow.dims("dim HH_n(k) = 1, 0, 0, ...", _h(chains, profile), point, "computed", "expected"))
    cochains = _cochains(k1, n, profile)
    report.add(ComparisonRow.dims("dim HH^n(k) = 1, 0, 0, ...", _hc(cochains, profile), point, "computed", "expected"))

    m = resolving_category(GroupAction.trivial(cyclic_group(2), k1), validate=False)
    matrices = matrix_algebra(field, 2)
    report.add(
        ComparisonRow.check(
            "a(M_{C2}(k₁)) = M_2(k)",
            [] if total_algebra(m.category).same_table(matrices) else ["multiplication tables differ"],
        )
    )
    m_cochains = _cochains(single_object_category(total_algebra(m.category)), n, profile)
    report.add(
        ComparisonRow.dims(
            "dim HH^n(a(M_{C2}(k₁))) = 1, 0, 0, ...",
            _hc(m_cochains, profile),
            point,
            "computed",
            "expected",
            truncated=m_cochains.truncated,
        )
    )
    report.add(
        ComparisonRow.dims("oracle: dim HH^n(M_2(k)) = 1, 0, 0, ...", Oracle.of(matrices, profile.max_basis_size).cohomology(n), point, "oracle", "expected")
    )
    report.add(
        ComparisonRow.dims("oracle: dim HH_n(M_2(k)) = 1, 0, 0, ...", Oracle.of(matrices, profile.max_basis_size).homology(n), point, "oracle", "expected")
    )
    return report
