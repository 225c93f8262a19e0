"""Hochschild-Mitchell cochain complexes of finite categories.

A cochain basis element of degree n is a key ``(p, h)``: the linear map
sending the composable path ``p = (f_n, ..., f_1)`` to the basis morphism
``h`` of _{x_{n+1}}C_{x_1} and every other path to zero. In degree 0,
``p = ()`` and h is an endomorphism of one object.

For a path ``q = (q_0, ..., q_n)`` of length n+1 the coboundary is

    dφ(q) = q_0∘φ(q_1, ..., q_n)
          + Σ_{k<n} (−1)^{k+1} φ(..., q_k∘q_{k+1}, ...)
          + (−1)^{n+1} φ(q_0, ..., q_{n−1})∘q_n

and the shifted convention multiplies it by (−1)^{n+1}.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterator

from sympy.polys.matrices import DomainMatrix

from ..constructions.grading import Grading
from ..errors import ComplexError, ResourceBudgetError
from ..group.finite_group import ConjClasses, FiniteGroup, conjugacy_classes
from ..lincat.category import LinCat
from ..lincat.matrices import from_dod, identity, is_zero, matmul, select_columns, select_rows, zeros
from ..lincat.scalars import Field, Scalar

logger = logging.getLogger(__name__)

Path = tuple[int, ...]
CochainKey = tuple[Path, int]


class CoboundarySign(Enum):
    """Sign convention of the coboundary.

    STANDARD: first term +q_0∘φ, last term (−1)^{n+1} φ∘q_n
    SHIFTED: the standard coboundary times (−1)^{n+1}, so the first term
        carries (−1)^{n+1} and the last term +1
    """

    STANDARD = "standard"
    SHIFTED = "shifted"


@dataclass(frozen=True, eq=False)
class CochainComplex:
    """A bounded complex C^0 → C^1 → ... → C^top.

    ``coboundaries[n]`` is d_n: C^n → C^{n+1}; the last one has no rows.
    Cohomology is reported up to ``max_degree = top − 1``.
    """

    field: Field
    coboundaries: tuple[DomainMatrix, ...]
    keys: tuple[tuple[CochainKey, ...], ...] | None = None
    category: LinCat | None = None
    sign: CoboundarySign = CoboundarySign.STANDARD
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
        return tuple(d.shape[1] for d in self.coboundaries)

    @property
    def top(self) -> int:
        return len(self.coboundaries) - 1

    @property
    def max_degree(self) -> int:
        return self.top - 1

    @cached_property
    def indices(self) -> tuple[dict[CochainKey, int], ...]:
        if self.keys is None:
            raise ComplexError("Complex has no cochain basis")
        return tuple({key: i for i, key in enumerate(keys)} for keys in self.keys)

    def label(self, n: int, i: int) -> str:
        if self.keys is None or self.category is None:
            return f"e{i}"
        p, h = self.keys[n][i]
        c = self.category
        args = "⊗".join(c.label(f) for f in p) if p else c.objects[c.basis[h].source]
        return f"[{args} ↦ {c.label(h)}]"

    def describe(self, n: int, vec: dict[int, Scalar]) -> dict[str, int | str]:
        return {self.label(n, i): self.field.to_text(vec[i]) for i in sorted(vec)}


def coboundary_failures(cx: CochainComplex) -> list[int]:
    """Degrees n with d_{n+1} ∘ d_n ≠ 0."""
    return [n for n in range(cx.top - 1) if not is_zero(matmul(cx.coboundaries[n + 1], cx.coboundaries[n]))]


def check_coboundaries(cx: CochainComplex) -> None:
    failures = coboundary_failures(cx)
    if failures:
        raise ComplexError(f"d∘d ≠ 0 in {cx.name or 'cochain complex'} at degree {failures[0]}")


def cochain_type(c: LinCat, grading: Grading, key: CochainKey) -> int:
    """deg(f_n)⋯deg(f_1)·deg(h)⁻¹ for a homogeneous cochain basis element."""
    p, h = key
    group = grading.group
    return group.mul(grading.product(p), group.inverse(grading.degree[h]))


# Enumeration


def iter_paths(c: LinCat, n: int) -> Iterator[Path]:
    """Composable tuples (f_n, ..., f_1) of basis morphisms, n ≥ 1."""
    basis = c.basis

    def extend(prefix: Path) -> Iterator[Path]:
        if len(prefix) == n:
            yield prefix
            return
        for f in c.by_target[basis[prefix[-1]].source]:
            yield from extend(prefix + (f,))

    for first in range(len(basis)):
        yield from extend((first,))


def iter_cochain_keys(c: LinCat, n: int) -> Iterator[CochainKey]:
    if n == 0:
        for x in range(len(c.objects)):
            for h in c.hom(x, x):
                yield (), h
        return
    for p in iter_paths(c, n):
        for h in c.hom(c.basis[p[0]].target, c.basis[p[-1]].source):
            yield p, h


def count_cochains(c: LinCat, n: int, grading: Grading | None = None, allowed: frozenset[int] | None = None) -> int:
    """dim C^n, optionally restricted to types in ``allowed``."""
    objects = range(len(c.objects))
    if grading is None or allowed is None:
        total = 0
        for top in objects:
            state = {top: 1}
            for _ in range(n):
                nxt: dict[int, int] = {}
                for y, k in state.items():
                    for f in c.by_target[y]:
                        x = c.basis[f].source
                        nxt[x] = nxt.get(x, 0) + k
                state = nxt
            total += sum(k * c.hom_dimension(top, x) for x, k in state.items())
        return total

    group = grading.group
    total = 0
    for top in objects:
        states: dict[tuple[int, int], int] = {(top, group.identity): 1}
        for _ in range(n):
            nxt: dict[tuple[int, int], int] = {}
            for (y, g), k in states.items():
                for f in c.by_target[y]:
                    key = (c.basis[f].source, group.mul(g, grading.degree[f]))
                    nxt[key] = nxt.get(key, 0) + k
            states = nxt
        for (x, g), k in states.items():
            for h in c.hom(top, x):
                if group.mul(g, group.inverse(grading.degree[h])) in allowed:
                    total += k
    return total


def _coboundary_matrix(
    c: LinCat,
    keys: tuple[CochainKey, ...],
    following: dict[CochainKey, int],
    n: int,
    sign: CoboundarySign,
) -> DomainMatrix:
    one = c.field.one
    basis = c.basis
    factorizations = c.factorizations
    overall = one if sign is CoboundarySign.STANDARD or n % 2 == 1 else -one
    last_sign = one if n % 2 == 1 else -one
    dod: dict[int, dict[int, Scalar]] = {}
    for j, (p, h) in enumerate(keys):
        column: dict[CochainKey, Scalar] = {}

        def add(key: CochainKey, value: Scalar) -> None:
            total = column.get(key)
            total = value if total is None else total + value
            if total:
                column[key] = total
            else:
                column.pop(key, None)

        top = basis[h].target
        bottom = basis[h].source
        for q0 in c.by_source[top]:
            for out, v in c.compose_basis(q0, h).items():
                add(((q0,) + p, out), v)
        for k in range(n):
            sign_k = -one if k % 2 == 0 else one
            for g, f, coeff in factorizations.get(p[k], ()):
                add((p[:k] + (g, f) + p[k + 1 :], h), sign_k * coeff)
        for qn in c.by_target[bottom]:
            for out, v in c.compose_basis(h, qn).items():
                add((p + (qn,), out), last_sign * v)

        for key, v in column.items():
            row = following.get(key)
            if row is None:
                raise ComplexError("Coboundary leaves the chosen cochain basis")
            dod.setdefault(row, {})[j] = overall * v
    return from_dod(dod, (len(following), len(keys)), c.field)


def cochain_complex(
    c: LinCat,
    max_degree: int,
    *,
    sign: CoboundarySign = CoboundarySign.STANDARD,
    grading: Grading | None = None,
    classes: ConjClasses | None = None,
    conjugacy_class: int | None = None,
    max_basis_size: int | None = None,
    truncate: bool = False,
    check: bool = True,
    name: str = "",
) -> CochainComplex:
    """C^•(C) in degrees 0..max_degree+1.

    With a grading every basis element carries the conjugacy class of its
    type; ``conjugacy_class`` keeps only that class.
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

    all_keys: list[tuple[CochainKey, ...]] = []
    truncated = False
    for n in range(max_degree + 2):
        if max_basis_size is not None:
            size = count_cochains(c, n, grading, allowed)
            if size > max_basis_size:
                if truncate and n >= 2:
                    logger.info(f"cochain complex {name}: degree {n} has dimension {size}, truncating at {n - 1}")
                    truncated = True
                    break
                raise ResourceBudgetError(n, size, max_basis_size)
        keys = iter_cochain_keys(c, n)
        if allowed is not None:
            keys = (key for key in keys if cochain_type(c, grading, key) in allowed)
        all_keys.append(tuple(keys))
        logger.debug(f"cochain complex {name}: dim C^{n} = {len(all_keys[-1])}")

    coboundaries = []
    for n in range(len(all_keys) - 1):
        following = {key: i for i, key in enumerate(all_keys[n + 1])}
        coboundaries.append(_coboundary_matrix(c, all_keys[n], following, n, sign))
    coboundaries.append(zeros((0, len(all_keys[-1])), c.field))

    class_of = None
    if grading is not None:
        class_of = tuple(tuple(classes.class_of[cochain_type(c, grading, key)] for key in keys) for keys in all_keys)
    cx = CochainComplex(
        c.field,
        tuple(coboundaries),
        keys=tuple(all_keys),
        category=c,
        sign=sign,
        group=grading.group if grading is not None else None,
        classes=classes,
        class_of=class_of,
        truncated=truncated,
        name=name or (f"C^•({c.name})" if c.name else "C^•"),
        provenance={"field": c.field.name, "sign": sign.value, "conjugacy_class": conjugacy_class},
    )
    if check:
        check_coboundaries(cx)
    return cx


def restrict_cochains(cx: CochainComplex, keep: list[list[int]], name: str = "", check: bool = True) -> CochainComplex:
    """Subcomplex on the kept basis elements; raises ComplexError if d leaves it."""
    if len(keep) != len(cx.coboundaries):
        raise ComplexError("Need a kept index list for every degree")
    coboundaries = []
    for n, d in enumerate(cx.coboundaries):
        if n == cx.top:
            coboundaries.append(zeros((0, len(keep[n])), cx.field))
            continue
        block = select_columns(d, keep[n])
        rows = set(keep[n + 1])
        for i in block.to_sparse().to_dod():
            if i not in rows:
                raise ComplexError(f"Coboundary d_{n} leaves the subcomplex {name}".rstrip())
        coboundaries.append(select_rows(block, keep[n + 1]))
    eyes = [identity(d.shape[1], cx.field) for d in cx.coboundaries]
    out = CochainComplex(
        cx.field,
        tuple(coboundaries),
        keys=tuple(tuple(cx.keys[n][i] for i in k) for n, k in enumerate(keep)) if cx.keys else None,
        category=cx.category,
        sign=cx.sign,
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
        check_coboundaries(out)
    return out
