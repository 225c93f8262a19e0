"""Restriction of cochains along a full and faithful functor."""

import logging
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from ..errors import ComplexError, FunctorError
from ..lincat.functor import LinFunctor
from ..lincat.matrices import Vector, add_scaled, apply, from_dod, matmul, matrices_equal, tensor_expand
from ..lincat.scalars import Scalar
from .cochains import CochainComplex
from .cup import DEFAULT_CHECK_LIMIT, basis_pairs, cup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CochainTransport:
    """C•F: C^•(C) → C^•(D) for F: D → C full and faithful.

    (C•F φ)(g_n, ..., g_1) = F⁻¹ φ(F g_n, ..., F g_1).
    """

    functor: LinFunctor
    source: CochainComplex
    target: CochainComplex
    maps: tuple[DomainMatrix, ...]

    def cochain_map_failures(self) -> list[int]:
        """Degrees n with T_{n+1} d_n ≠ d_n T_n."""
        return [
            n
            for n in range(len(self.maps) - 1)
            if not matrices_equal(
                matmul(self.maps[n + 1], self.source.coboundaries[n]),
                matmul(self.target.coboundaries[n], self.maps[n]),
            )
        ]

    def multiplicativity_failures(self, limit: int = DEFAULT_CHECK_LIMIT) -> list[str]:
        """Basis pairs with T(ψ⌣φ) ≠ Tψ ⌣ Tφ."""
        one = self.source.field.one
        src, tgt = self.source, self.target
        out = []
        for m, i, n, j in basis_pairs(src.dimensions, len(self.maps) - 1, limit):
            psi, phi = {i: one}, {j: one}
            lhs = apply(self.maps[m + n], cup(src, m, psi, n, phi))
            rhs = cup(tgt, m, apply(self.maps[m], psi), n, apply(self.maps[n], phi))
            if lhs != rhs:
                out.append(f"C•F is not multiplicative on {src.label(m, i)} ⌣ {src.label(n, j)}")
        return out

    def equivariance_failures(self) -> list[str]:
        """Degrees and elements with T(s·φ) ≠ s·T(φ); needs actions on both complexes."""
        if self.source.actions is None or self.target.actions is None or self.source.group is None:
            raise ComplexError("Equivariance needs G-actions on both cochain complexes")
        group = self.source.group
        out = []
        for n, t in enumerate(self.maps):
            for s in group.elements:
                if not matrices_equal(matmul(t, self.source.actions[n][s]), matmul(self.target.actions[n][s], t)):
                    out.append(f"C•F does not commute with {group.labels[s]} in degree {n}")
        return out


def transport_cochains(f: LinFunctor, source: CochainComplex, target: CochainComplex) -> CochainTransport:
    """The matrices of C•F from C^•(f.target) to C^•(f.source), degree by degree."""
    c, d = f.target, f.source
    if source.category is not c or target.category is not d or source.keys is None or target.keys is None:
        raise FunctorError("Cochain complexes do not match the functor's categories")
    one = c.field.one
    blocks: dict[tuple[int, int], dict[int, Vector]] = {}

    def inverse_block(top: int, bottom: int) -> dict[int, Vector]:
        if (top, bottom) not in blocks:
            rows = d.hom(top, bottom)
            cols = c.hom(f.object_map[top], f.object_map[bottom])
            inv = f.block_inverse(top, bottom).to_sparse().to_dod()
            by_column: dict[int, Vector] = {}
            for r, row in inv.items():
                for k, v in row.items():
                    by_column.setdefault(cols[k], {})[rows[r]] = v
            blocks[(top, bottom)] = by_column
        return blocks[(top, bottom)]

    maps = []
    for n in range(min(source.top, target.top) + 1):
        source_index = source.indices[n]
        target_index = target.indices[n]
        dod: dict[int, dict[int, Scalar]] = {}
        if n == 0:
            for y in range(len(d.objects)):
                _fill(dod, {(): one}, inverse_block(y, y), (), source_index, target_index)
        for q in dict.fromkeys(q for q, _ in target.keys[n] if q):
            top, bottom = d.basis[q[0]].target, d.basis[q[-1]].source
            images = tensor_expand([f.images[g] for g in q], one)
            _fill(dod, images, inverse_block(top, bottom), q, source_index, target_index)
        maps.append(from_dod(dod, (target.dimensions[n], source.dimensions[n]), c.field))
    logger.debug(f"cochain transport along {f.name or 'functor'}: degrees 0..{len(maps) - 1}")
    return CochainTransport(f, source, target, tuple(maps))


def _fill(
    dod: dict[int, dict[int, Scalar]],
    images: dict[tuple[int, ...], Scalar],
    back: dict[int, Vector],
    q: tuple[int, ...],
    source_index: dict,
    target_index: dict,
) -> None:
    for p, coeff in images.items():
        for h, preimage in back.items():
            col = source_index.get((p, h))
            if col is None:
                raise ComplexError("Transported cochain is outside the source basis")
            for h2, v in preimage.items():
                row = target_index.get((q, h2))
                if row is None:
                    raise ComplexError("Transported cochain is outside the target basis")
                entry = dod.setdefault(row, {})
                add_scaled(entry, {col: v}, coeff)
