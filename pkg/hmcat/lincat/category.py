"""Finite k-linear categories given by structure constants."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from ..errors import StructureError
from .matrices import Vector, add_scaled
from .scalars import Field, Scalar


@dataclass(frozen=True)
class BasisMorphism:
    """A basis vector of the hom space _{target}C_{source}."""

    label: str
    source: int
    target: int


@dataclass(frozen=True, eq=False)
class LinCat:
    """A finite k-linear category.

    Morphisms are sparse vectors over the global basis, which is the
    concatenation of all hom bases. ``comp[(g, f)]`` is the nonzero
    composite g∘f of two basis morphisms (f first). ``identities[x]`` is the
    vector of 1_x in _xC_x.
    """

    field: Field
    objects: tuple[str, ...]
    basis: tuple[BasisMorphism, ...]
    comp: Mapping[tuple[int, int], Vector]
    identities: tuple[Vector, ...]
    name: str = ""
    metadata: Mapping[str, object] = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        field: Field,
        objects: Sequence[str],
        hom: Mapping[tuple[str, str], Sequence[str]],
        comp: Mapping[tuple[str, str], Mapping[str, object]],
        identities: Mapping[str, Mapping[str, object]],
        name: str = "",
    ) -> "LinCat":
        """Assemble a category from labels.

        ``hom`` maps (target, source) to basis labels, ``comp`` maps
        (g, f) label pairs to g∘f as {label: scalar}. Unknown objects or
        labels raise StructureError.
        """
        objects = tuple(objects)
        if len(set(objects)) != len(objects):
            raise StructureError("Duplicate object identifiers")
        obj_index = {x: i for i, x in enumerate(objects)}
        basis: list[BasisMorphism] = []
        label_index: dict[str, int] = {}
        for (target, source), labels in hom.items():
            for name_ in (target, source):
                if name_ not in obj_index:
                    raise StructureError(f"Hom space refers to unknown object {name_!r}")
            for label in labels:
                label = str(label)
                if label in label_index:
                    raise StructureError(f"Duplicate basis label {label!r}")
                label_index[label] = len(basis)
                basis.append(BasisMorphism(label, obj_index[source], obj_index[target]))

        def vector(terms: Mapping[str, object], where: str) -> Vector:
            out: Vector = {}
            for label, coeff in terms.items():
                if str(label) not in label_index:
                    raise StructureError(f"{where} refers to unknown basis label {label!r}")
                add_scaled(out, {label_index[str(label)]: field.one}, field(coeff))
            return out

        comp_table: dict[tuple[int, int], Vector] = {}
        for (g, f), result in comp.items():
            for label in (g, f):
                if str(label) not in label_index:
                    raise StructureError(f"Composition refers to unknown basis label {label!r}")
            value = vector(result, f"Composition {g}∘{f}")
            if value:
                comp_table[(label_index[str(g)], label_index[str(f)])] = value

        ids: list[Vector] = []
        for x in objects:
            if x not in identities:
                raise StructureError(f"No identity given for object {x!r}")
            ids.append(vector(identities[x], f"Identity of {x}"))
        extra = set(identities) - set(objects)
        if extra:
            raise StructureError(f"Identity given for unknown object {sorted(extra)[0]!r}")

        return cls(field, objects, tuple(basis), comp_table, tuple(ids), name)

    # Indexing

    @cached_property
    def object_index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.objects)}

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {b.label: i for i, b in enumerate(self.basis)}

    @cached_property
    def _hom(self) -> dict[tuple[int, int], tuple[int, ...]]:
        blocks: dict[tuple[int, int], list[int]] = {}
        for i, b in enumerate(self.basis):
            blocks.setdefault((b.target, b.source), []).append(i)
        return {key: tuple(v) for key, v in blocks.items()}

    def hom(self, target: int, source: int) -> tuple[int, ...]:
        """Basis indices of _{target}C_{source}."""
        return self._hom.get((target, source), ())

    def hom_dimension(self, target: int, source: int) -> int:
        return len(self.hom(target, source))

    @cached_property
    def by_source(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.objects]
        for i, b in enumerate(self.basis):
            out[b.source].append(i)
        return tuple(tuple(v) for v in out)

    @cached_property
    def by_target(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.objects]
        for i, b in enumerate(self.basis):
            out[b.target].append(i)
        return tuple(tuple(v) for v in out)

    @cached_property
    def factorizations(self) -> dict[int, tuple[tuple[int, int, Scalar], ...]]:
        """For each basis h, the pairs (g, f) whose composite has h-coefficient c."""
        out: dict[int, list[tuple[int, int, Scalar]]] = {}
        for (g, f), vec in self.comp.items():
            for h, c in vec.items():
                out.setdefault(h, []).append((g, f, c))
        return {h: tuple(v) for h, v in out.items()}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def hom_pairs(self) -> Iterable[tuple[int, int]]:
        """(target, source) pairs in canonical order."""
        for y in range(len(self.objects)):
            for x in range(len(self.objects)):
                yield y, x

    def label(self, i: int) -> str:
        return self.basis[i].label

    # Composition

    def compose_basis(self, g: int, f: int) -> Vector:
        """g∘f for basis morphisms; zero when not composable."""
        return self.comp.get((g, f), {})

    def compose(self, g: Mapping[int, Scalar], f: Mapping[int, Scalar]) -> Vector:
        out: Vector = {}
        for gi, gc in g.items():
            for fi, fc in f.items():
                value = self.comp.get((gi, fi))
                if value:
                    add_scaled(out, value, gc * fc)
        return out

    def basis_vector(self, i: int) -> Vector:
        return {i: self.field.one}

    def describe(self, vec: Mapping[int, Scalar]) -> dict[str, int | str]:
        """Vector as {label: scalar text} in basis order."""
        return {self.basis[i].label: self.field.to_text(vec[i]) for i in sorted(vec)}

    def __repr__(self) -> str:
        return f"LinCat({self.name or 'unnamed'}, objects={len(self.objects)}, dim={self.dimension}, {self.field})"
