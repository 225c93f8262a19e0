"""Finite groups given by multiplication tables, and their conjugacy classes."""

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Sequence

from ..errors import GroupError
from ..lincat.algebra import AlgebraView
from ..lincat.scalars import Field


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Elements are indices into ``labels``; index 0 is the identity.

    ``table[a][b]`` is the index of a·b.
    """

    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    name: str = ""

    @classmethod
    def from_table(cls, labels: Sequence[str], table: Sequence[Sequence[object]], name: str = "") -> "FiniteGroup":
        """Build and check a group; table entries may be labels or indices."""
        labels = tuple(str(x) for x in labels)
        index = {x: i for i, x in enumerate(labels)}
        if len(index) != len(labels):
            raise GroupError("Duplicate group element labels")
        n = len(labels)
        if n == 0:
            raise GroupError("A group needs at least one element")
        if len(table) != n or any(len(row) != n for row in table):
            raise GroupError(f"Multiplication table must be {n}x{n}")
        rows = []
        for row in table:
            out = []
            for entry in row:
                if isinstance(entry, int) and not isinstance(entry, bool) and 0 <= entry < n:
                    out.append(entry)
                elif str(entry) in index:
                    out.append(index[str(entry)])
                else:
                    raise GroupError(f"Table entry {entry!r} is not a group element")
            rows.append(tuple(out))
        group = cls(labels, tuple(rows), name)
        group.check()
        return group

    def check(self) -> None:
        n = self.order
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise GroupError(f"First element {self.labels[0]} is not the identity")
        for a in range(n):
            if 0 not in self.table[a]:
                raise GroupError(f"{self.labels[a]} has no inverse")
        for a, b, c in product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise GroupError(
                    f"Table is not associative at ({self.labels[a]}, {self.labels[b]}, {self.labels[c]})"
                )

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def identity(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    @cached_property
    def index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.labels)}

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.inverses[a]

    def product(self, elements: Sequence[int]) -> int:
        """Product taken left to right."""
        out = 0
        for e in elements:
            out = self.table[out][e]
        return out

    def conjugate(self, g: int, a: int) -> int:
        """g·a·g⁻¹."""
        return self.table[self.table[g][a]][self.inverses[g]]

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or 'unnamed'}, order={self.order})"


@dataclass(frozen=True)
class ConjClasses:
    """Conjugacy classes ordered by smallest element index; class 0 is {1}."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def trivial(self) -> int:
        return 0

    def __len__(self) -> int:
        return len(self.classes)

    def label(self, group: FiniteGroup, k: int) -> str:
        return "{" + ",".join(group.labels[a] for a in self.classes[k]) + "}"


def conjugacy_classes(group: FiniteGroup) -> ConjClasses:
    class_of = [-1] * group.order
    classes: list[tuple[int, ...]] = []
    for a in group.elements:
        if class_of[a] >= 0:
            continue
        members = sorted({group.conjugate(g, a) for g in group.elements})
        for m in members:
            class_of[m] = len(classes)
        classes.append(tuple(members))
    return ConjClasses(tuple(classes), tuple(class_of))


def trivial_group() -> FiniteGroup:
    return FiniteGroup(("1",), ((0,),), name="1")


def cyclic_group(n: int, generator: str = "s") -> FiniteGroup:
    """C_n with elements 1, s, s^2, ..., s^{n-1}."""
    if n < 1:
        raise GroupError("Cyclic group order must be positive")
    labels = tuple("1" if i == 0 else (generator if i == 1 else f"{generator}^{i}") for i in range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(labels, table, name=f"C{n}")


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on permutations in one-line notation; (στ)(i) = σ(τ(i))."""
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    labels = tuple("".join(str(i + 1) for i in p) for p in perms)
    table = tuple(
        tuple(index[tuple(s[t[i]] for i in range(n))] for t in perms)
        for s in perms
    )
    return FiniteGroup(labels, table, name=f"S{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    labels = tuple(f"({a},{b})" for a in g.labels for b in h.labels)
    m = h.order
    table = tuple(
        tuple(g.mul(a1, a2) * m + h.mul(b1, b2) for a2 in g.elements for b2 in h.elements)
        for a1 in g.elements
        for b1 in h.elements
    )
    return FiniteGroup(labels, table, name=f"{g.name}×{h.name}")


def group_algebra(group: FiniteGroup, field: Field) -> AlgebraView:
    """kG with basis the group elements."""
    table = {(a, b): {group.mul(a, b): field.one} for a in group.elements for b in group.elements}
    return AlgebraView(field, group.labels, table, {0: field.one}, name=f"k{group.name}")
