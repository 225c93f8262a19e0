"""Homology dimensions, cycle representatives and induced G-actions on homology."""

import logging
import dataclasses
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from ..errors import ComplexError
from ..group.representations import Representation
from ..lincat.matrices import (
    DEFAULT_DENSE_THRESHOLD,
    Vector,
    columns,
    kernel,
    matmul,
    quotient,
    rank,
)
from .chains import ChainComplex

logger = logging.getLogger(__name__)


@dataclass
class HomologyResult:
    """dim H_n for n ≤ max_degree with the ranks they came from."""

    dimensions: tuple[int, ...]
    chain_dimensions: tuple[int, ...]
    boundary_ranks: tuple[int, ...]
    name: str = ""
    field: str = ""
    truncated: bool = False
    class_dimensions: dict[str, tuple[int, ...]] = dataclasses.field(default_factory=dict)

    @property
    def max_degree(self) -> int:
        return len(self.dimensions) - 1

    def to_dict(self) -> dict:
        out = {
            "complex": self.name,
            "field": self.field,
            "max_degree": self.max_degree,
            "dimensions": list(self.dimensions),
            "chain_dimensions": list(self.chain_dimensions),
            "boundary_ranks": list(self.boundary_ranks),
        }
        if self.truncated:
            out["truncated"] = True
        if self.class_dimensions:
            out["classes"] = {k: list(v) for k, v in self.class_dimensions.items()}
        return out


def boundary_ranks(cx: ChainComplex, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> tuple[int, ...]:
    return tuple(rank(d, dense_threshold) for d in cx.boundaries)


def homology(cx: ChainComplex, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> HomologyResult:
    """dim H_n = dim C_n − rank d_n − rank d_{n+1}."""
    ranks = boundary_ranks(cx, dense_threshold)
    dims = cx.dimensions
    out = tuple(dims[n] - ranks[n] - ranks[n + 1] for n in range(cx.top))
    if any(d < 0 for d in out):
        raise ComplexError(f"Negative homology dimension in {cx.name}: d∘d ≠ 0")
    logger.debug(f"homology of {cx.name}: {out}")
    return HomologyResult(
        dimensions=out,
        chain_dimensions=dims,
        boundary_ranks=ranks,
        name=cx.name,
        field=cx.field.name,
        truncated=cx.truncated,
    )


@dataclass(frozen=True)
class HomologySpace:
    """H_n = Z_n / B_n with Z_n in kernel coordinates.

    ``cycles`` has the kernel basis as columns; ``projection`` maps kernel
    coordinates onto H_n and ``section`` lifts H_n back into them.
    """

    degree: int
    cycles: DomainMatrix
    free: tuple[int, ...]
    projection: DomainMatrix
    section: DomainMatrix

    @property
    def dimension(self) -> int:
        return self.projection.shape[0]

    def cycle_coordinates(self, matrix: DomainMatrix) -> DomainMatrix:
        """Kernel coordinates of chains (matrix columns) that are cycles."""
        return matrix.to_sparse().extract(list(self.free), list(range(matrix.shape[1])))


def homology_space(cx: ChainComplex, n: int, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> HomologySpace:
    if not 0 <= n < cx.top:
        raise ComplexError(f"H_{n} needs degrees up to {n + 1}; complex stops at {cx.top}")
    z = kernel(cx.boundaries[n], cx.field, dense_threshold)
    images = z.coordinates(cx.boundaries[n + 1])
    q = quotient(images.transpose(), z.dimension, cx.field, dense_threshold)
    return HomologySpace(n, z.basis, z.free, q.projection, q.section)


def homology_basis(cx: ChainComplex, n: int, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> list[Vector]:
    """Cycles whose classes form a basis of H_n."""
    h = homology_space(cx, n, dense_threshold)
    reps = matmul(h.cycles, h.section)
    found = columns(reps)
    return [found.get(j, {}) for j in range(h.dimension)]


def homology_representation(cx: ChainComplex, n: int, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> Representation:
    """The action of G on H_n induced by the chain-level action."""
    if cx.actions is None or cx.group is None:
        raise ComplexError("Complex carries no G-action")
    h = homology_space(cx, n, dense_threshold)
    lifted = matmul(h.cycles, h.section)
    matrices = tuple(
        matmul(h.projection, h.cycle_coordinates(matmul(cx.actions[n][s], lifted))) for s in cx.group.elements
    )
    return Representation(cx.group, cx.field, h.dimension, matrices)
