"""k-linear functors between finite categories."""

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from sympy.polys.matrices import DomainMatrix

from ..errors import FieldMismatchError, FunctorError
from .category import LinCat
from .matrices import Vector, add_scaled, from_dod, inverse, rank
from .scalars import Scalar
from .validation import ValidationReport


@dataclass(frozen=True)
class IsoWitness:
    """Morphisms u: F(x) → y and v: y → F(x) claimed mutually inverse."""

    target_object: int
    source_object: int
    forward: Vector
    backward: Vector


@dataclass(frozen=True, eq=False)
class LinFunctor:
    """F: source → target, given by an object map and basis images."""

    source: LinCat
    target: LinCat
    object_map: tuple[int, ...]
    images: tuple[Vector, ...]
    name: str = ""

    def __post_init__(self) -> None:
        if self.source.field != self.target.field:
            raise FieldMismatchError(self.source.field.name, self.target.field.name)
        if len(self.object_map) != len(self.source.objects):
            raise FunctorError("Object map does not cover every source object")
        if len(self.images) != self.source.dimension:
            raise FunctorError("Basis images do not cover every source basis vector")

    def apply(self, vec: Mapping[int, Scalar]) -> Vector:
        out: Vector = {}
        for i, c in vec.items():
            add_scaled(out, self.images[i], c)
        return out

    def block(self, target: int, source: int) -> DomainMatrix:
        """Matrix of F on _{target}C_{source} → _{F target}D_{F source}."""
        cols = self.source.hom(target, source)
        rows = self.target.hom(self.object_map[target], self.object_map[source])
        row_pos = {h: r for r, h in enumerate(rows)}
        dod: dict[int, dict[int, Scalar]] = {}
        for j, f in enumerate(cols):
            for h, c in self.images[f].items():
                if h not in row_pos:
                    raise FunctorError(
                        f"Image of {self.source.label(f)} leaves _{self.target.objects[self.object_map[target]]}"
                        f"D_{self.target.objects[self.object_map[source]]}"
                    )
                dod.setdefault(row_pos[h], {})[j] = c
        return from_dod(dod, (len(rows), len(cols)), self.source.field)

    @cached_property
    def _block_ranks(self) -> dict[tuple[int, int], int]:
        return {(y, x): rank(self.block(y, x)) for y, x in self.source.hom_pairs()}

    @property
    def is_faithful(self) -> bool:
        return all(r == self.source.hom_dimension(y, x) for (y, x), r in self._block_ranks.items())

    @property
    def is_full(self) -> bool:
        return all(
            r == self.target.hom_dimension(self.object_map[y], self.object_map[x])
            for (y, x), r in self._block_ranks.items()
        )

    @property
    def is_surjective_on_objects(self) -> bool:
        return set(self.object_map) == set(range(len(self.target.objects)))

    def is_dense(self, witnesses: Sequence[IsoWitness] = ()) -> bool:
        """Every target object is in the image or isomorphic to an image object.

        Isomorphisms are only taken from ``witnesses``; each is checked.
        """
        covered = set(self.object_map)
        d = self.target
        for w in witnesses:
            y, fx = w.target_object, self.object_map[w.source_object]
            if d.compose(w.forward, w.backward) != d.identities[y]:
                continue
            if d.compose(w.backward, w.forward) != d.identities[fx]:
                continue
            covered.add(y)
        return covered == set(range(len(d.objects)))

    def block_inverse(self, target: int, source: int) -> DomainMatrix:
        """(F_{target,source})⁻¹ for a full and faithful functor."""
        try:
            return inverse(self.block(target, source))
        except ValueError as e:
            raise FunctorError(
                f"{self.name or 'functor'} is not bijective on "
                f"_{self.source.objects[target]}C_{self.source.objects[source]}"
            ) from e


def validate_functor(f: LinFunctor) -> ValidationReport:
    """F respects hom blocks, composition and identities."""
    report = ValidationReport(f"functor {f.name}".strip())
    c, d = f.source, f.target
    for i, b in enumerate(c.basis):
        fy, fx = f.object_map[b.target], f.object_map[b.source]
        for h in f.images[i]:
            if d.basis[h].target != fy or d.basis[h].source != fx:
                report.add("block", f"F({b.label}) has a component {d.label(h)} in the wrong hom space", b.label)
    for x, ident in enumerate(c.identities):
        if f.apply(ident) != d.identities[f.object_map[x]]:
            report.add("identity", f"F(1_{c.objects[x]}) ≠ 1_{d.objects[f.object_map[x]]}", c.objects[x])
    for fi, bf in enumerate(c.basis):
        for g in c.by_source[bf.target]:
            left = f.apply(c.compose_basis(g, fi))
            right = d.compose(f.images[g], f.images[fi])
            if left != right:
                report.add("composition", f"F({c.label(g)}∘{bf.label}) ≠ F({c.label(g)})∘F({bf.label})", c.label(g), bf.label)
    return report


def identity_functor(c: LinCat) -> LinFunctor:
    return LinFunctor(
        c,
        c,
        tuple(range(len(c.objects))),
        tuple(c.basis_vector(i) for i in range(c.dimension)),
        name=f"id_{c.name}" if c.name else "identity",
    )


def compose_functors(g: LinFunctor, f: LinFunctor) -> LinFunctor:
    """g∘f (apply f first)."""
    if f.target is not g.source:
        raise FunctorError("Functors are not composable")
    return LinFunctor(
        f.source,
        g.target,
        tuple(g.object_map[y] for y in f.object_map),
        tuple(g.apply(img) for img in f.images),
        name=f"{g.name}∘{f.name}",
    )
