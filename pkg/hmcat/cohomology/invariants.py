"""The G-action on cochains and the invariant subcomplex C^•(C)^G."""

import logging
from dataclasses import replace
from typing import Sequence

from sympy.polys.matrices import DomainMatrix

from ..errors import ActionError, ComplexError
from ..group.action import GroupAction
from ..group.representations import Representation, invariants
from ..lincat.matrices import (
    DEFAULT_DENSE_THRESHOLD,
    Vector,
    apply,
    from_dod,
    identity,
    matmul,
    matrices_equal,
    tensor_expand,
    zeros,
)
from ..lincat.scalars import Scalar
from .cochains import CochainComplex, CochainKey, check_coboundaries
from .cup import DEFAULT_CHECK_LIMIT, basis_pairs, cup

logger = logging.getLogger(__name__)


def _pullback_rows(a: GroupAction, s: int) -> list[Vector]:
    """rows[f][g] = coefficient of f in s·g."""
    rows: list[Vector] = [{} for _ in a.category.basis]
    for g in range(a.category.dimension):
        for f, v in a.act_basis(s, g).items():
            rows[f][g] = v
    return rows


def cochain_action_matrix(a: GroupAction, keys: Sequence[CochainKey], index: dict[CochainKey, int], s: int) -> DomainMatrix:
    """(s·φ)(f_n, ..., f_1) = s·φ(s⁻¹f_n, ..., s⁻¹f_1) on one degree."""
    c = a.category
    one = c.field.one
    rows = _pullback_rows(a, a.group.inverse(s))
    dod: dict[int, dict[int, Scalar]] = {}
    for j, (p, h) in enumerate(keys):
        paths = tensor_expand([rows[f] for f in p], one) if p else {(): one}
        image = a.act_basis(s, h)
        for q, c1 in paths.items():
            for out, c2 in image.items():
                row = index.get((q, out))
                if row is None:
                    raise ActionError("Action moves a cochain outside the complex")
                dod.setdefault(row, {})[j] = c1 * c2
    return from_dod(dod, (len(keys), len(keys)), c.field)


def attach_g_action_cochains(cx: CochainComplex, a: GroupAction, check: bool = True) -> CochainComplex:
    """Attach the conjugation action of G and check it commutes with d."""
    if cx.category is not a.category or cx.keys is None:
        raise ActionError("Complex was not built from the acted-on category")
    actions = tuple(
        tuple(cochain_action_matrix(a, keys, cx.indices[n], s) for s in a.group.elements)
        for n, keys in enumerate(cx.keys)
    )
    out = replace(cx, group=a.group, actions=actions)
    if check:
        for n in range(cx.top):
            d = cx.coboundaries[n]
            for s in a.group.elements:
                if not matrices_equal(matmul(actions[n + 1][s], d), matmul(d, actions[n][s])):
                    raise ComplexError(f"Action of {a.group.labels[s]} does not commute with d_{n}")
    return out


def invariant_complex(
    cx: CochainComplex, dense_threshold: int = DEFAULT_DENSE_THRESHOLD, check: bool = True
) -> CochainComplex:
    """Restrict each C^n to (C^n)^G.

    ``to_parent[n]`` is the inclusion and ``from_parent[n]`` the retraction
    reading invariant cochains off their free coordinates.
    """
    if cx.actions is None or cx.group is None:
        raise ComplexError("Invariants need a complex with a G-action")
    subspaces = []
    for n, matrices in enumerate(cx.actions):
        rep = Representation(cx.group, cx.field, cx.dimensions[n], matrices)
        subspaces.append(invariants(rep, dense_threshold))
    coboundaries = []
    for n in range(cx.top + 1):
        if n == cx.top:
            coboundaries.append(zeros((0, subspaces[n].dimension), cx.field))
            continue
        coboundaries.append(matmul(subspaces[n + 1].retraction, matmul(cx.coboundaries[n], subspaces[n].inclusion)))
    trivial = tuple(tuple(identity(v.dimension, cx.field) for _ in cx.group.elements) for v in subspaces)
    out = replace(
        cx,
        coboundaries=tuple(coboundaries),
        keys=None,
        actions=trivial,
        class_of=None,
        from_parent=tuple(v.retraction for v in subspaces),
        to_parent=tuple(v.inclusion for v in subspaces),
        name=f"({cx.name})^G",
        provenance={**cx.provenance, "derived": "invariants"},
    )
    logger.debug(f"invariant complex of {cx.name}: dims {out.dimensions}")
    if check:
        check_coboundaries(out)
    return out


def action_cup_failures(cx: CochainComplex, limit: int = DEFAULT_CHECK_LIMIT) -> list[str]:
    """Basis pairs and elements with s·(ψ⌣φ) ≠ s·ψ ⌣ s·φ."""
    if cx.actions is None or cx.group is None:
        raise ComplexError("Complex carries no G-action")
    one = cx.field.one
    out = []
    for m, i, n, j in basis_pairs(cx.dimensions, cx.top, limit):
        psi, phi = {i: one}, {j: one}
        product = cup(cx, m, psi, n, phi)
        for s in cx.group.elements:
            lhs = apply(cx.actions[m + n][s], product)
            rhs = cup(cx, m, apply(cx.actions[m][s], psi), n, apply(cx.actions[n][s], phi))
            if lhs != rhs:
                out.append(f"{cx.group.labels[s]} does not distribute over {cx.label(m, i)} ⌣ {cx.label(n, j)}")
    return out


def invariant_cup_failures(parent: CochainComplex, invariant: CochainComplex, limit: int = DEFAULT_CHECK_LIMIT) -> list[str]:
    """Pairs of invariant basis cochains whose cup product is not invariant."""
    if parent.actions is None or parent.group is None or invariant.to_parent is None:
        raise ComplexError("Need the parent complex with its action and the invariant complex")
    one = parent.field.one
    out = []
    for m, i, n, j in basis_pairs(invariant.dimensions, invariant.top, limit):
        psi = apply(invariant.to_parent[m], {i: one})
        phi = apply(invariant.to_parent[n], {j: one})
        product = cup(parent, m, psi, n, phi)
        if any(apply(parent.actions[m + n][s], product) != product for s in parent.group.elements):
            out.append(f"Cup of invariant cochains {m}:{i} and {n}:{j} is not invariant")
    return out
