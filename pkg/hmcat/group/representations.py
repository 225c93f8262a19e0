"""Linear representations of finite groups and their (co)invariants."""

import logging
from dataclasses import dataclass
from typing import Sequence

from sympy.polys.matrices import DomainMatrix

from ..errors import RepresentationError
from ..lincat.matrices import (
    DEFAULT_DENSE_THRESHOLD,
    identity,
    intersect_kernels,
    is_identity,
    matmul,
    matrices_equal,
    quotient,
    select_rows,
    subtract,
    vstack,
)
from ..lincat.scalars import Field
from .finite_group import FiniteGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Representation:
    """G acting linearly on k^dimension; ``matrices[s]`` is the action of s."""

    group: FiniteGroup
    field: Field
    dimension: int
    matrices: tuple[DomainMatrix, ...]

    @classmethod
    def trivial(cls, group: FiniteGroup, field: Field, dimension: int) -> "Representation":
        eye = identity(dimension, field)
        return cls(group, field, dimension, tuple(eye for _ in group.elements))

    def check(self) -> None:
        """Raise RepresentationError unless 1 acts trivially and (st) = s∘t."""
        n = self.dimension
        if len(self.matrices) != self.group.order:
            raise RepresentationError("A representation needs one matrix per group element")
        for s, m in enumerate(self.matrices):
            if m.shape != (n, n):
                raise RepresentationError(f"Matrix of {self.group.labels[s]} has shape {m.shape}, expected {(n, n)}")
        if n and not is_identity(self.matrices[0]):
            raise RepresentationError("The identity element does not act as the identity")
        for s in self.group.elements:
            for t in self.group.elements:
                st = self.group.mul(s, t)
                if not matrices_equal(self.matrices[st], matmul(self.matrices[s], self.matrices[t])):
                    raise RepresentationError(
                        f"Action of {self.group.labels[st]} differs from "
                        f"{self.group.labels[s]}∘{self.group.labels[t]}"
                    )


@dataclass(frozen=True)
class CoinvariantQuotient:
    """V_G = V / span{sv − v}.

    ``projection`` is V → V_G; ``section`` is a linear right inverse
    V_G → V picking one preimage per basis class.
    """

    dimension: int
    projection: DomainMatrix
    section: DomainMatrix


@dataclass(frozen=True)
class InvariantSubspace:
    """V^G = ∩_s ker(s − 1).

    ``inclusion`` is V^G → V; ``retraction`` is a left inverse V → V^G that
    reads invariant vectors off their free coordinates.
    """

    dimension: int
    inclusion: DomainMatrix
    retraction: DomainMatrix


def _differences(rep: Representation) -> list[DomainMatrix]:
    eye = identity(rep.dimension, rep.field)
    return [subtract(rep.matrices[s], eye) for s in rep.group.elements if s != rep.group.identity]


def coinvariants(rep: Representation, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> CoinvariantQuotient:
    """Largest quotient of V on which G acts trivially."""
    rep.check()
    n = rep.dimension
    # row space of (s − 1)ᵀ is the span of all sv − v
    relations = vstack([m.transpose() for m in _differences(rep)], n, rep.field)
    q = quotient(relations, n, rep.field, dense_threshold)
    logger.debug(f"coinvariants: dim V = {n}, dim V_G = {q.dimension}")
    return CoinvariantQuotient(q.dimension, q.projection, q.section)


def invariants(rep: Representation, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> InvariantSubspace:
    """Fixed vectors of V."""
    rep.check()
    n = rep.dimension
    ker = intersect_kernels(_differences(rep), n, rep.field, dense_threshold)
    logger.debug(f"invariants: dim V = {n}, dim V^G = {ker.dimension}")
    return InvariantSubspace(ker.dimension, ker.basis, select_rows(identity(n, rep.field), ker.free))


def averaging(rep: Representation) -> DomainMatrix:
    """(1/|G|) Σ_s s, defined when |G| is invertible in k."""
    if not rep.field.is_unit(rep.group.order):
        raise RepresentationError(f"|G| = {rep.group.order} is not invertible in {rep.field}")
    total = rep.matrices[0].to_sparse()
    for s in rep.group.elements:
        if s != rep.group.identity:
            total = total.add(rep.matrices[s].to_sparse())
    scale = rep.field.inverse(rep.field(rep.group.order))
    return total.scalarmul(scale)


def averaging_check(
    rep: Representation,
    coinv: CoinvariantQuotient | None = None,
    inv: InvariantSubspace | None = None,
) -> bool | None:
    """Whether averaging identifies V_G with V^G.

    Checks projection ∘ average ∘ section = 1 on V_G and that the averaged
    section lands in V^G with matching dimension. Returns None when |G| is
    not invertible in k, where the comparison does not apply.
    """
    if not rep.field.is_unit(rep.group.order):
        return None
    coinv = coinv or coinvariants(rep)
    inv = inv or invariants(rep)
    if coinv.dimension != inv.dimension:
        return False
    if coinv.dimension == 0:
        return True
    avg = averaging(rep)
    lifted = matmul(avg, coinv.section)
    if not is_identity(matmul(coinv.projection, lifted)):
        return False
    return all(matrices_equal(matmul(rep.matrices[s], lifted), lifted) for s in rep.group.elements)


def induced_on_quotient(
    matrices: Sequence[DomainMatrix], projection: DomainMatrix, section: DomainMatrix
) -> tuple[DomainMatrix, ...]:
    """Action on a G-stable quotient V/W given by a projection and section."""
    return tuple(matmul(projection, matmul(m, section)) for m in matrices)
