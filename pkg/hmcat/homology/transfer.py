"""Explicit inverse chain maps between (C_•(C))_G and C^{1}_•(C_T[G]) for free actions."""

import logging
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from ..constructions.skew import skew_category
from ..constructions.transversal import TransversalSubcategory, transversal_subcategory
from ..errors import ComplexError
from ..group.action import GroupAction
from ..group.orbits import OrbitData, orbits_transversal
from ..lincat.matrices import Vector, add_scaled, columns, from_columns, is_identity, matmul, matrices_equal, tensor_expand
from ..lincat.scalars import Scalar
from .chains import ChainComplex, attach_g_action, bar_complex
from .coinvariants import coinvariant_complex

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HomologyTransfer:
    """A: (C_•(C))_G → C^{1}_•(C_T[G]) and its inverse B, degree by degree."""

    source: ChainComplex
    target: ChainComplex
    forward: tuple[DomainMatrix, ...]
    backward: tuple[DomainMatrix, ...]

    def failures(self) -> list[str]:
        """Every identity among dA = Ad, dB = Bd, AB = 1, BA = 1 that does not hold."""
        out = []
        a, b = self.forward, self.backward
        for n in range(1, self.source.top + 1):
            if not matrices_equal(matmul(a[n - 1], self.source.boundaries[n]), matmul(self.target.boundaries[n], a[n])):
                out.append(f"A is not a chain map in degree {n}")
            if not matrices_equal(matmul(b[n - 1], self.target.boundaries[n]), matmul(self.source.boundaries[n], b[n])):
                out.append(f"B is not a chain map in degree {n}")
        for n in range(self.source.top + 1):
            if not is_identity(matmul(a[n], b[n])):
                out.append(f"AB ≠ 1 in degree {n}")
            if not is_identity(matmul(b[n], a[n])):
                out.append(f"BA ≠ 1 in degree {n}")
        return out


def factor_map(a: GroupAction, orbits: OrbitData, ts: TransversalSubcategory) -> list[Vector]:
    """C → C_T[G] on basis morphisms: f: x → y goes to w(y)⁻¹f in degree w(y)⁻¹w(x).

    w(x) is the element carrying the representative of x's orbit to x.
    """
    group, c = a.group, a.category
    witness = orbits.witness
    position = {u: k for k, u in enumerate(orbits.transversal)}
    sub_index = {key: i for i, key in enumerate(ts.keys)}
    out = []
    for f, b in enumerate(c.basis):
        back = group.inverse(witness[b.target])
        degree = group.mul(back, witness[b.source])
        u = orbits.representative[b.source]
        if u not in position:
            raise ComplexError("Representative outside the transversal")
        out.append({sub_index[(u, degree, h)]: v for h, v in a.act_basis(back, f).items()})
    return out


def transfer_maps_homology(
    a: GroupAction,
    max_degree: int,
    orbits: OrbitData | None = None,
    max_basis_size: int | None = None,
    truncate: bool = False,
) -> HomologyTransfer:
    """Build both complexes and the maps A and B between them.

    A is computed on anchored representatives: a chain starting at x₀ is
    first moved by the r with r·x₀ in the transversal.
    """
    c, group = a.category, a.group
    orbits = orbits or orbits_transversal(a)
    orbits.require_free(c.objects, group.order)
    one = c.field.one

    base = bar_complex(c, max_degree, max_basis_size=max_basis_size, truncate=truncate)
    source = coinvariant_complex(attach_g_action(base, a))
    ts = transversal_subcategory(skew_category(a, validate=False), orbits)
    top = base.top
    target = bar_complex(
        ts.category,
        top - 1,
        grading=ts.grading,
        conjugacy_class=0,
        max_basis_size=max_basis_size,
        name="C^{1}_•(C_T[G])",
    )
    phi = factor_map(a, orbits, ts)

    forward = []
    for n in range(top + 1):
        cols = []
        section = columns(source.to_parent[n])
        index = target.indices[n]
        for j in range(source.dimensions[n]):
            col: Vector = {}
            for i, coeff in section.get(j, {}).items():
                p = base.chains[n][i]
                r = orbits.anchor(group, c.basis[p[0]].target)
                for q, c1 in tensor_expand([a.act_basis(r, f) for f in p], one).items():
                    for key, c2 in tensor_expand([phi[f] for f in q], one).items():
                        if key not in index:
                            raise ComplexError(f"A sends a chain outside class {{1}} in degree {n}")
                        add_scaled(col, {index[key]: c2}, coeff * c1)
            cols.append(col)
        forward.append(from_columns(cols, target.dimensions[n], c.field))

    backward = []
    for n in range(top + 1):
        cols = []
        index = base.indices[n]
        for p in target.chains[n]:
            factors = []
            m = group.identity
            for g in p:
                _, s, h = ts.keys[g]
                factors.append(a.act_basis(m, h))
                m = group.mul(m, s)
            cols.append(_on_basis(tensor_expand(factors, one), index))
        lifted = from_columns(cols, base.dimensions[n], c.field)
        backward.append(matmul(source.from_parent[n], lifted))

    logger.debug(f"homology transfer: source dims {source.dimensions}, target dims {target.dimensions}")
    return HomologyTransfer(source, target, tuple(forward), tuple(backward))


def _on_basis(expansion: dict[tuple[int, ...], Scalar], index: dict[tuple[int, ...], int]) -> Vector:
    out: Vector = {}
    for key, v in expansion.items():
        if key not in index:
            raise ComplexError("B produces a tuple that is not a chain")
        out[index[key]] = v
    return out
