"""Cohomology dimensions, cocycle representatives and induced actions."""

import logging
from dataclasses import dataclass

from ..errors import ComplexError
from ..group.representations import Representation
from ..homology.ranks import HomologyResult, HomologySpace
from ..lincat.matrices import DEFAULT_DENSE_THRESHOLD, Vector, columns, kernel, matmul, quotient, rank, zeros
from .cochains import CochainComplex

logger = logging.getLogger(__name__)


@dataclass
class CohomologyResult(HomologyResult):
    """dim H^n for n ≤ max_degree; ``boundary_ranks[n]`` is rank d_n: C^n → C^{n+1}."""

    def to_dict(self) -> dict:
        out = super().to_dict()
        out["coboundary_ranks"] = out.pop("boundary_ranks")
        out["cochain_dimensions"] = out.pop("chain_dimensions")
        return out


def coboundary_ranks(cx: CochainComplex, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> tuple[int, ...]:
    return tuple(rank(d, dense_threshold) for d in cx.coboundaries)


def cohomology(cx: CochainComplex, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> CohomologyResult:
    """dim H^n = dim C^n − rank d_n − rank d_{n−1}."""
    ranks = coboundary_ranks(cx, dense_threshold)
    dims = cx.dimensions
    out = tuple(dims[n] - ranks[n] - (ranks[n - 1] if n else 0) for n in range(cx.top))
    if any(d < 0 for d in out):
        raise ComplexError(f"Negative cohomology dimension in {cx.name}: d∘d ≠ 0")
    logger.debug(f"cohomology of {cx.name}: {out}")
    return CohomologyResult(
        dimensions=out,
        chain_dimensions=dims,
        boundary_ranks=ranks,
        name=cx.name,
        field=cx.field.name,
        truncated=cx.truncated,
    )


def cohomology_space(cx: CochainComplex, n: int, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> HomologySpace:
    """H^n = Z^n / B^n in kernel coordinates of d_n."""
    if not 0 <= n < cx.top:
        raise ComplexError(f"H^{n} needs degrees up to {n + 1}; complex stops at {cx.top}")
    z = kernel(cx.coboundaries[n], cx.field, dense_threshold)
    if n:
        relations = z.coordinates(cx.coboundaries[n - 1]).transpose()
    else:
        relations = zeros((0, z.dimension), cx.field)
    q = quotient(relations, z.dimension, cx.field, dense_threshold)
    return HomologySpace(n, z.basis, z.free, q.projection, q.section)


def cocycle_basis(cx: CochainComplex, n: int, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> list[Vector]:
    """Cocycles whose classes form a basis of H^n."""
    h = cohomology_space(cx, n, dense_threshold)
    found = columns(matmul(h.cycles, h.section))
    return [found.get(j, {}) for j in range(h.dimension)]


def cohomology_representation(
    cx: CochainComplex, n: int, dense_threshold: int = DEFAULT_DENSE_THRESHOLD
) -> Representation:
    """The action of G on H^n induced by the cochain-level action."""
    if cx.actions is None or cx.group is None:
        raise ComplexError("Complex carries no G-action")
    h = cohomology_space(cx, n, dense_threshold)
    lifted = matmul(h.cycles, h.section)
    matrices = tuple(
        matmul(h.projection, h.cycle_coordinates(matmul(cx.actions[n][s], lifted))) for s in cx.group.elements
    )
    return Representation(cx.group, cx.field, h.dimension, matrices)
