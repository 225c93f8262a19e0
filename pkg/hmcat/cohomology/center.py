"""The center of a finite category: natural endotransformations of the identity."""

import logging
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from ..lincat.category import LinCat
from ..lincat.matrices import DEFAULT_DENSE_THRESHOLD, Vector, apply, columns, from_dod, kernel
from ..lincat.scalars import Scalar
from .cochains import CochainComplex, CochainKey, iter_cochain_keys
from .ranks import cohomology

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Center:
    """Families (z_x ∈ End(x)) with f∘z_x = z_y∘f for every f: x → y.

    ``basis`` lists central families as vectors over ``keys``, the degree-0
    cochain basis of endomorphisms.
    """

    keys: tuple[CochainKey, ...]
    basis: tuple[Vector, ...]
    matrix: DomainMatrix

    @property
    def dimension(self) -> int:
        return len(self.basis)


def commutation_matrix(c: LinCat) -> tuple[tuple[CochainKey, ...], DomainMatrix]:
    """Rows indexed by (f, h) with f a basis morphism, columns by endomorphisms."""
    keys = tuple(iter_cochain_keys(c, 0))
    dod: dict[int, dict[int, Scalar]] = {}
    rows: dict[tuple[int, int], int] = {}
    for j, (_, z) in enumerate(keys):
        x = c.basis[z].source
        for f in c.by_source[x]:
            for h, v in c.compose_basis(f, z).items():
                row = rows.setdefault((f, h), len(rows))
                dod.setdefault(row, {})[j] = dod.get(row, {}).get(j, c.field.zero) + v
        for f in c.by_target[x]:
            for h, v in c.compose_basis(z, f).items():
                row = rows.setdefault((f, h), len(rows))
                dod.setdefault(row, {})[j] = dod.get(row, {}).get(j, c.field.zero) - v
    return keys, from_dod(dod, (len(rows), len(keys)), c.field)


def center(c: LinCat, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> Center:
    keys, m = commutation_matrix(c)
    ker = kernel(m, c.field, dense_threshold)
    found = columns(ker.basis)
    basis = tuple(found.get(j, {}) for j in range(ker.dimension))
    logger.debug(f"center of {c.name or 'category'}: dimension {len(basis)}")
    return Center(keys, basis, m)


def check_center_matches_h0(c: LinCat, cx: CochainComplex) -> bool:
    """dim Z(C) = dim HH^0(C) and the central families are exactly the 0-cocycles."""
    z = center(c)
    if cohomology(cx).dimensions[0] != z.dimension:
        return False
    index = cx.indices[0]
    return all(not apply(cx.coboundaries[0], {index[z.keys[i]]: v for i, v in vec.items()}) for vec in z.basis)
