"""Hochschild-Mitchell bar chain complexes of finite categories.

A chain of degree n is a tuple ``p`` of basis morphisms ``p[0] = f_n, ...,
p[n] = f_0`` going once around a cycle of objects: the source of ``p[k]`` is
the target of ``p[k+1]`` and the source of ``p[n]`` is the target of
``p[0]``. The boundary is

    d(p) = Σ_{k<n} (−1)^k (..., p[k]∘p[k+1], ...) + (−1)^n (p[n]∘p[0], p[1], ..., p[n−1])

which in degree 2 reads f₂f₁⊗f₀ − f₂⊗f₁f₀ + f₀f₂⊗f₁.
"""

import logging
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterator, Sequence

from sympy.polys.matrices import DomainMatrix

from ..constructions.grading import Grading
from ..errors import ActionError, ComplexError, ResourceBudgetError
from ..group.action import GroupAction
from ..group.finite_group import ConjClasses, FiniteGroup, conjugacy_classes
from ..lincat.category import LinCat
from ..lincat.matrices import (
    from_dod,
    identity,
    is_zero,
    matmul,
    matrices_equal,
    select_columns,
    select_rows,
    tensor_expand,
    zeros,
)
from ..lincat.scalars import Field, Scalar

logger = logging.getLogger(__name__)

Chain = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """A bounded complex C_0 ← C_1 ← ... ← C_top.

    ``boundaries[n]`` is d_n: C_n → C_{n−1}; d_0 has no rows. Homology is
    reported up to ``max_degree = top − 1``. Complexes derived from a parent
    (quotients, restrictions) keep ``from_parent[n]`` and ``to_parent[n]``.
    """

    field: Field
    boundaries: tuple[DomainMatrix, ...]
    chains: tuple[tuple[Chain, ...], ...] | None = None
    category: LinCat | None = None
    group: FiniteGroup | None = None
    actions: tuple[tuple[DomainMatrix, ...], ...] | None = None
    classes: ConjClasses | None = None
    class_of: tuple[tuple[int, ...], ...] | None = None
    from_parent: tuple[DomainMatrix, ...] | None = None
    to_parent: tuple[DomainMatrix, ...] | None = None
    truncated: bool = False
    name: str = ""
    provenance: dict = field(default_factory=dict)

    @property
    def dimensions(self) -> tuple[int, ...]:
        return tuple(d.shape[1] for d in self.boundaries)

    @property
    def top(self) -> int:
        return len(self.boundaries) - 1

    @property
    def max_degree(self) -> int:
        return self.top - 1

    @cached_property
    def indices(self) -> tuple[dict[Chain, int], ...]:
        if self.chains is None:
            raise ComplexError("Complex has no chain basis")
        return tuple({p: i for i, p in enumerate(chains)} for chains in self.chains)

    def label(self, n: int, i: int) -> str:
        if self.chains is None or self.category is None:
            return f"e{i}"
        return "⊗".join(self.category.label(f) for f in self.chains[n][i])

    def describe(self, n: int, vec: dict[int, Scalar]) -> dict[str, int | str]:
        return {self.label(n, i): self.field.to_text(vec[i]) for i in sorted(vec)}


def boundary_failures(cx: ChainComplex) -> list[int]:
    """Degrees n with d_n ∘ d_{n+1} ≠ 0."""
    return [n for n in range(1, cx.top) if not is_zero(matmul(cx.boundaries[n], cx.boundaries[n + 1]))]


def check_boundaries(cx: ChainComplex) -> None:
    failures = boundary_failures(cx)
    if failures:
        raise ComplexError(f"d∘d ≠ 0 in {cx.name or 'complex'} at degree {failures[0]}")


# Enumeration


def iter_cycles(c: LinCat, n: int) -> Iterator[Chain]:
    """Cyclically composable tuples of n+1 basis morphisms, in lexicographic order."""
    basis = c.basis
    if n == 0:
        for f, b in enumerate(basis):
            if b.source == b.target:
                yield (f,)
        return

    def extend(prefix: Chain, current: int, start: int) -> Iterator[Chain]:
        if len(prefix) == n:
            for f in c.hom(current, start):
                yield prefix + (f,)
            return
        for f in c.by_target[current]:
            yield from extend(prefix + (f,), basis[f].source, start)

    for first, b in enumerate(basis):
        yield from extend((first,), b.source, b.target)


def count_cycles(c: LinCat, n: int, grading: Grading | None = None, allowed: frozenset[int] | None = None) -> int:
    """Number of degree-n chains, optionally only those whose degree product lies in ``allowed``."""
    objects = range(len(c.objects))
    if grading is None or allowed is None:
        dims = [[c.hom_dimension(y, x) for x in objects] for y in objects]
        total = 0
        for x0 in objects:
            state = {x0: 1}
            for _ in range(n + 1):
                nxt: dict[int, int] = {}
                for y, k in state.items():
                    for x in objects:
                        if dims[y][x]:
                            nxt[x] = nxt.get(x, 0) + k * dims[y][x]
                state = nxt
            total += state.get(x0, 0)
        return total

    group = grading.group
    blocks: dict[int, list[tuple[int, int]]] = {}
    for f, b in enumerate(c.basis):
        blocks.setdefault(b.target, []).append((b.source, grading.degree[f]))
    total = 0
    for x0 in objects:
        states: dict[tuple[int, int], int] = {(x0, group.identity): 1}
        for _ in range(n + 1):
            nxt: dict[tuple[int, int], int] = {}
            for (y, g), k in states.items():
                for x, s in blocks.get(y, ()):
                    key = (x, group.mul(g, s))
                    nxt[key] = nxt.get(key, 0) + k
            states = nxt
        total += sum(k for (x, g), k in states.items() if x == x0 and g in allowed)
    return total


def _boundary_matrix(
    c: LinCat, chains: Sequence[Chain], previous: dict[Chain, int], n: int, field_: Field
) -> DomainMatrix:
    one = field_.one
    dod: dict[int, dict[int, Scalar]] = {}
    for j, p in enumerate(chains):
        column: dict[Chain, Scalar] = {}

        def add(key: Chain, value: Scalar) -> None:
            total = column.get(key)
            total = value if total is None else total + value
            if total:
                column[key] = total
            else:
                column.pop(key, None)

        for k in range(n):
            sign = one if k % 2 == 0 else -one
            for h, v in c.compose_basis(p[k], p[k + 1]).items():
                add(p[:k] + (h,) + p[k + 2 :], sign * v)
        sign = one if n % 2 == 0 else -one
        for h, v in c.compose_basis(p[n], p[0]).items():
            add((h,) + p[1:n], sign * v)
        for key, v in column.items():
            row = previous.get(key)
            if row is None:
                raise ComplexError(
                    f"Boundary of {'⊗'.join(c.label(f) for f in p)} leaves the chosen chain basis"
                )
            dod.setdefault(row, {})[j] = v
    return from_dod(dod, (len(previous), len(chains)), field_)


def bar_complex(
    c: LinCat,
    max_degree: int,
    *,
    grading: Grading | None = None,
    classes: ConjClasses | None = None,
    conjugacy_class: int | None = None,
    max_basis_size: int | None = None,
    truncate: bool = False,
    check: bool = True,
    name: str = "",
) -> ChainComplex:
    """C_•(C) in degrees 0..max_degree+1.

    With a grading, every chain carries the conjugacy class of its degree
    product deg(p[0])·deg(p[1])⋯deg(p[n]); ``conjugacy_class`` keeps only the
    chains of that class. A degree whose basis exceeds ``max_basis_size``
    raises ResourceBudgetError, or ends the complex early when ``truncate``
    is set.
    """
    if max_degree < 0:
        raise ComplexError("Degree bound must be nonnegative")
    if conjugacy_class is not None and grading is None:
        raise ComplexError("A class-filtered complex needs a grading")
    if grading is not None and grading.base is not c:
        raise ComplexError("Grading belongs to a different category")
    if grading is not None and classes is None:
        classes = conjugacy_classes(grading.group)
    allowed = frozenset(classes.classes[conjugacy_class]) if conjugacy_class is not None else None

    all_chains: list[tuple[Chain, ...]] = []
    boundaries: list[DomainMatrix] = []
    class_of: list[tuple[int, ...]] = []
    truncated = False
    for n in range(max_degree + 2):
        if max_basis_size is not None:
            size = count_cycles(c, n, grading, allowed)
            if size > max_basis_size:
                if truncate and n >= 2:
                    logger.info(f"bar complex {name}: degree {n} has {size} chains, truncating at degree {n - 1}")
                    truncated = True
                    break
                raise ResourceBudgetError(n, size, max_basis_size)
        chains = iter_cycles(c, n)
        if allowed is not None:
            chains = (p for p in chains if grading.product(p) in allowed)
        chains = tuple(chains)
        if n == 0:
            boundaries.append(zeros((0, len(chains)), c.field))
        else:
            previous = {p: i for i, p in enumerate(all_chains[-1])}
            boundaries.append(_boundary_matrix(c, chains, previous, n, c.field))
        all_chains.append(chains)
        if grading is not None:
            class_of.append(tuple(classes.class_of[grading.product(p)] for p in chains))
        logger.debug(f"bar complex {name}: dim C_{n} = {len(chains)}")

    cx = ChainComplex(
        c.field,
        tuple(boundaries),
        chains=tuple(all_chains),
        category=c,
        group=grading.group if grading is not None else None,
        classes=classes,
        class_of=tuple(class_of) if grading is not None else None,
        truncated=truncated,
        name=name or (f"C_•({c.name})" if c.name else "C_•"),
        provenance={"field": c.field.name, "conjugacy_class": conjugacy_class},
    )
    if check:
        check_boundaries(cx)
    return cx


# Group actions


def chain_action_matrix(a: GroupAction, chains: Sequence[Chain], index: dict[Chain, int], s: int) -> DomainMatrix:
    """s·(f_n ⊗ ... ⊗ f_0) = s·f_n ⊗ ... ⊗ s·f_0 on one degree."""
    one = a.category.field.one
    dod: dict[int, dict[int, Scalar]] = {}
    for j, p in enumerate(chains):
        for key, v in tensor_expand([a.act_basis(s, f) for f in p], one).items():
            row = index.get(key)
            if row is None:
                raise ActionError("Action moves a chain outside the complex")
            dod.setdefault(row, {})[j] = v
    return from_dod(dod, (len(chains), len(chains)), a.category.field)


def attach_g_action(cx: ChainComplex, a: GroupAction, check: bool = True) -> ChainComplex:
    """Attach the factorwise action of G and check it commutes with d."""
    if cx.category is not a.category or cx.chains is None:
        raise ActionError("Complex was not built from the acted-on category")
    actions = tuple(
        tuple(chain_action_matrix(a, chains, cx.indices[n], s) for s in a.group.elements)
        for n, chains in enumerate(cx.chains)
    )
    out = replace(cx, group=a.group, actions=actions)
    if check:
        for n in range(1, cx.top + 1):
            d = cx.boundaries[n]
            for s in a.group.elements:
                if not matrices_equal(matmul(actions[n - 1][s], d), matmul(d, actions[n][s])):
                    raise ComplexError(f"Action of {a.group.labels[s]} does not commute with d_{n}")
    return out


# Restriction


def restrict_complex(cx: ChainComplex, keep: Sequence[Sequence[int]], name: str = "", check: bool = True) -> ChainComplex:
    """Subcomplex spanned by the kept basis vectors of each degree.

    Raises ComplexError if a boundary leaves the kept span.
    """
    if len(keep) != len(cx.boundaries):
        raise ComplexError("Need a kept index list for every degree")
    keep = [tuple(k) for k in keep]
    boundaries = []
    for n, d in enumerate(cx.boundaries):
        if n == 0:
            boundaries.append(zeros((0, len(keep[0])), cx.field))
            continue
        block = select_columns(d, keep[n])
        rows = set(keep[n - 1])
        for i, row in block.to_sparse().to_dod().items():
            if i not in rows and row:
                raise ComplexError(f"Boundary d_{n} leaves the subcomplex {name}".rstrip())
        boundaries.append(select_rows(block, keep[n - 1]))
    eyes = [identity(d.shape[1], cx.field) for d in cx.boundaries]
    out = ChainComplex(
        cx.field,
        tuple(boundaries),
        chains=tuple(tuple(cx.chains[n][i] for i in k) for n, k in enumerate(keep)) if cx.chains else None,
        category=cx.category,
        group=cx.group,
        classes=cx.classes,
        class_of=tuple(tuple(cx.class_of[n][i] for i in k) for n, k in enumerate(keep)) if cx.class_of else None,
        from_parent=tuple(select_rows(e, k) for e, k in zip(eyes, keep)),
        to_parent=tuple(select_columns(e, k) for e, k in zip(eyes, keep)),
        truncated=cx.truncated,
        name=name or cx.name,
        provenance=dict(cx.provenance),
    )
    if check:
        check_boundaries(out)
    return out
