"""Explicit inverse cochain maps between C^•(C)^G and C^•_{1}(C_T[G]) for free actions."""

import logging
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from ..constructions.skew import skew_category
from ..constructions.transversal import TransversalSubcategory, transversal_subcategory
from ..errors import ComplexError
from ..group.action import GroupAction
from ..group.orbits import OrbitData, orbits_transversal
from ..homology.transfer import factor_map
from ..lincat.matrices import Vector, add_scaled, apply, from_dod, is_identity, matmul, matrices_equal, tensor_expand
from ..lincat.scalars import Scalar
from .cochains import CoboundarySign, CochainComplex, cochain_complex
from .cup import DEFAULT_CHECK_LIMIT, basis_pairs, cup
from .invariants import attach_g_action_cochains, invariant_complex

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CohomologyTransfer:
    """A: C^•(C)^G → C^•_{1}(C_T[G]) and its inverse B, degree by degree.

    ``base`` is the full cochain complex of C and ``lifts[n]`` the map A
    extended to all of C^n, so cup products can be taken in ``base``.
    """

    base: CochainComplex
    source: CochainComplex
    target: CochainComplex
    forward: tuple[DomainMatrix, ...]
    backward: tuple[DomainMatrix, ...]
    lifts: tuple[DomainMatrix, ...]

    def failures(self) -> list[str]:
        """Every identity among dA = Ad, dB = Bd, AB = 1, BA = 1 that does not hold."""
        out = []
        a, b = self.forward, self.backward
        for n in range(self.source.top):
            if not matrices_equal(matmul(a[n + 1], self.source.coboundaries[n]), matmul(self.target.coboundaries[n], a[n])):
                out.append(f"A is not a cochain map in degree {n}")
            if not matrices_equal(matmul(b[n + 1], self.target.coboundaries[n]), matmul(self.source.coboundaries[n], b[n])):
                out.append(f"B is not a cochain map in degree {n}")
        for n in range(self.source.top + 1):
            if not is_identity(matmul(a[n], b[n])):
                out.append(f"AB ≠ 1 in degree {n}")
            if not is_identity(matmul(b[n], a[n])):
                out.append(f"BA ≠ 1 in degree {n}")
        return out

    def multiplicativity_failures(self, limit: int = DEFAULT_CHECK_LIMIT) -> list[str]:
        """Invariant basis pairs with A(ψ⌣φ) ≠ Aψ ⌣ Aφ."""
        one = self.base.field.one
        src = self.source
        out = []
        for m, i, n, j in basis_pairs(src.dimensions, src.top, limit):
            psi = apply(src.to_parent[m], {i: one})
            phi = apply(src.to_parent[n], {j: one})
            lhs = apply(self.lifts[m + n], cup(self.base, m, psi, n, phi))
            rhs = cup(self.target, m, apply(self.lifts[m], psi), n, apply(self.lifts[n], phi))
            if lhs != rhs:
                out.append(f"A is not multiplicative on invariant cochains {m}:{i} ⌣ {n}:{j}")
        return out


def _forward_lift(
    a: GroupAction, ts: TransversalSubcategory, base: CochainComplex, target: CochainComplex, n: int
) -> DomainMatrix:
    """(Aψ)(f_n, ..., f_1) = ψ(f_n, s_n f_{n−1}, s_n s_{n−1} f_{n−2}, ...) on all of C^n."""
    group, c = a.group, a.category
    one = c.field.one
    index = base.indices[n]
    dod: dict[int, dict[int, Scalar]] = {}
    for r, (q, out) in enumerate(target.keys[n]):
        _, degree, h = ts.keys[out]
        factors = []
        m = group.identity
        for g in q:
            _, s, f = ts.keys[g]
            factors.append(a.act_basis(m, f))
            m = group.mul(m, s)
        if m != degree:
            continue
        row: Vector = {}
        for p, coeff in tensor_expand(factors, one).items():
            col = index.get((p, h))
            if col is None:
                raise ComplexError(f"A reads a cochain outside C^{n}")
            add_scaled(row, {col: one}, coeff)
        if row:
            dod[r] = row
    return from_dod(dod, (target.dimensions[n], base.dimensions[n]), c.field)


def _backward_lift(
    a: GroupAction,
    orbits: OrbitData,
    ts: TransversalSubcategory,
    base: CochainComplex,
    target: CochainComplex,
    n: int,
) -> DomainMatrix:
    """(Bφ)(g_n, ..., g_1) = s_{n+1}·φ(s_{n+1}⁻¹g_n, s_n⁻¹g_{n−1}, ..., s₂⁻¹g₁) at x_i = s_i u_i."""
    c = a.category
    one = c.field.one
    witness = orbits.witness
    index = base.indices[n]
    by_path: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for j, (q, out) in enumerate(target.keys[n]):
        by_path.setdefault(q, []).append((j, out))
    dod: dict[int, dict[int, Scalar]] = {}

    def emit(p: tuple[int, ...], top: int, bottom: int, expansion: dict[tuple[int, ...], Scalar]) -> None:
        s_top = witness[top]
        u_bottom = orbits.representative[bottom]
        for q, coeff in expansion.items():
            for j, out in by_path.get(q, ()):
                x, _, h = ts.keys[out]
                if x != u_bottom:
                    continue
                for g, v in a.act_basis(s_top, h).items():
                    row = index.get((p, g))
                    if row is None:
                        raise ComplexError(f"B produces a value outside C^{n}")
                    add_scaled(dod.setdefault(row, {}), {j: one}, coeff * v)

    if n == 0:
        for x in range(len(c.objects)):
            emit((), x, x, {(): one})
    else:
        phi = factor_map(a, orbits, ts)
        for p in dict.fromkeys(p for p, _ in base.keys[n]):
            top, bottom = c.basis[p[0]].target, c.basis[p[-1]].source
            emit(p, top, bottom, tensor_expand([phi[f] for f in p], one))
    return from_dod(dod, (base.dimensions[n], target.dimensions[n]), c.field)


def transfer_maps_cohomology(
    a: GroupAction,
    max_degree: int,
    orbits: OrbitData | None = None,
    sign: CoboundarySign = CoboundarySign.STANDARD,
    max_basis_size: int | None = None,
    truncate: bool = False,
) -> CohomologyTransfer:
    """Build C^•(C)^G, C^•_{1}(C_T[G]) and the maps A and B between them."""
    c, group = a.category, a.group
    orbits = orbits or orbits_transversal(a)
    orbits.require_free(c.objects, group.order)

    base = attach_g_action_cochains(
        cochain_complex(c, max_degree, sign=sign, max_basis_size=max_basis_size, truncate=truncate), a
    )
    source = invariant_complex(base)
    ts = transversal_subcategory(skew_category(a, validate=False), orbits)
    target = cochain_complex(
        ts.category,
        base.top - 1,
        sign=sign,
        grading=ts.grading,
        conjugacy_class=0,
        max_basis_size=max_basis_size,
        name="C^•_{1}(C_T[G])",
    )

    lifts = tuple(_forward_lift(a, ts, base, target, n) for n in range(base.top + 1))
    forward = tuple(matmul(lift, source.to_parent[n]) for n, lift in enumerate(lifts))
    backward = tuple(
        matmul(source.from_parent[n], _backward_lift(a, orbits, ts, base, target, n)) for n in range(base.top + 1)
    )
    logger.debug(f"cohomology transfer: source dims {source.dimensions}, target dims {target.dimensions}")
    return CohomologyTransfer(base, source, target, forward, backward, lifts)
