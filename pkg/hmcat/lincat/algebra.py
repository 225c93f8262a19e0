"""Total algebras a(C), single-object categories, tensor products and subcategories."""

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

from ..errors import AlgebraError, FieldMismatchError, StructureError
from .category import BasisMorphism, LinCat
from .functor import LinFunctor
from .matrices import Vector, add_scaled, tensor_expand
from .scalars import Field, Scalar
from .validation import ValidationReport


@dataclass(frozen=True, eq=False)
class AlgebraView:
    """A finite-dimensional algebra by its multiplication table.

    ``table[(i, j)]`` is the nonzero product e_i·e_j.
    """

    field: Field
    labels: tuple[str, ...]
    table: Mapping[tuple[int, int], Vector]
    unit: Vector
    name: str = ""

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def multiply(self, a: Mapping[int, Scalar], b: Mapping[int, Scalar]) -> Vector:
        out: Vector = {}
        for i, x in a.items():
            for j, y in b.items():
                value = self.table.get((i, j))
                if value:
                    add_scaled(out, value, x * y)
        return out

    def basis_vector(self, i: int) -> Vector:
        return {i: self.field.one}

    def same_table(self, other: "AlgebraView") -> bool:
        """Equal dimension, multiplication table and unit in matching basis order."""
        return (
            self.field == other.field
            and self.dimension == other.dimension
            and dict(self.table) == dict(other.table)
            and self.unit == other.unit
        )


def validate_algebra(a: AlgebraView) -> ValidationReport:
    report = ValidationReport(f"algebra {a.name}".strip())
    n = a.dimension
    for i in range(n):
        e = a.basis_vector(i)
        if a.multiply(a.unit, e) != e or a.multiply(e, a.unit) != e:
            report.add("unit", f"unit is not two-sided on {a.labels[i]}", a.labels[i])
    for i, j, k in product(range(n), repeat=3):
        left = a.multiply(a.table.get((i, j), {}), a.basis_vector(k))
        right = a.multiply(a.basis_vector(i), a.table.get((j, k), {}))
        if left != right:
            report.add(
                "associativity",
                f"({a.labels[i]}·{a.labels[j]})·{a.labels[k]} ≠ {a.labels[i]}·({a.labels[j]}·{a.labels[k]})",
                a.labels[i],
                a.labels[j],
                a.labels[k],
            )
    return report


def total_algebra(c: LinCat) -> AlgebraView:
    """a(C): the direct sum of all hom spaces with matrix-style multiplication."""
    unit: Vector = {}
    for ident in c.identities:
        add_scaled(unit, ident, c.field.one)
    return AlgebraView(
        c.field,
        tuple(b.label for b in c.basis),
        dict(c.comp),
        unit,
        name=f"a({c.name})" if c.name else "",
    )


def single_object_category(table: AlgebraView, object_name: str = "•") -> LinCat:
    """Λ₁: one object whose endomorphism algebra is Λ."""
    validate_algebra(table).raise_if_invalid(AlgebraError)
    return LinCat(
        table.field,
        (object_name,),
        tuple(BasisMorphism(label, 0, 0) for label in table.labels),
        dict(table.table),
        (dict(table.unit),),
        name=f"{table.name}₁" if table.name else "",
    )


def tensor_product(c: LinCat, d: LinCat) -> LinCat:
    """C ⊗ D: pairs of objects, hom spaces _{c'}C_c ⊗ _{d'}D_d."""
    if c.field != d.field:
        raise FieldMismatchError(c.field.name, d.field.name)
    nd = len(d.objects)
    objects = tuple(f"({x},{y})" for x in c.objects for y in d.objects)
    basis = []
    pair_index: dict[tuple[int, int], int] = {}
    for (cy, cx), (dy, dx) in product(list(c.hom_pairs()), list(d.hom_pairs())):
        for i in c.hom(cy, cx):
            for j in d.hom(dy, dx):
                pair_index[(i, j)] = len(basis)
                basis.append(
                    BasisMorphism(f"{c.label(i)}⊗{d.label(j)}", cx * nd + dx, cy * nd + dy)
                )
    one = c.field.one

    def as_vector(expansion: Mapping[tuple[int, ...], Scalar]) -> Vector:
        return {pair_index[key]: v for key, v in expansion.items()}

    comp: dict[tuple[int, int], Vector] = {}
    for (gi, gj), g in pair_index.items():
        for (fi, fj), f in pair_index.items():
            left = c.compose_basis(gi, fi)
            right = d.compose_basis(gj, fj)
            if left and right:
                value = as_vector(tensor_expand([left, right], one))
                if value:
                    comp[(g, f)] = value
    identities = tuple(
        as_vector(tensor_expand([c.identities[x], d.identities[y]], one))
        for x in range(len(c.objects))
        for y in range(nd)
    )
    name = f"{c.name}⊗{d.name}" if c.name and d.name else ""
    pairs_meta = tuple(sorted(pair_index, key=pair_index.get))
    return LinCat(c.field, objects, tuple(basis), comp, identities, name=name, metadata={"factor_pairs": pairs_meta})


def full_subcategory(c: LinCat, objects: Sequence[int], name: str = "") -> tuple[LinCat, LinFunctor]:
    """Full subcategory on ``objects`` (kept in the given order) and its inclusion."""
    objects = tuple(objects)
    if len(set(objects)) != len(objects) or any(not 0 <= x < len(c.objects) for x in objects):
        raise StructureError("Subcategory objects must be distinct objects of the category")
    position = {x: i for i, x in enumerate(objects)}
    kept = [i for i, b in enumerate(c.basis) if b.source in position and b.target in position]
    new_index = {i: k for k, i in enumerate(kept)}
    basis = tuple(
        BasisMorphism(c.basis[i].label, position[c.basis[i].source], position[c.basis[i].target]) for i in kept
    )
    comp = {
        (new_index[g], new_index[f]): {new_index[h]: v for h, v in value.items()}
        for (g, f), value in c.comp.items()
        if g in new_index and f in new_index
    }
    identities = tuple({new_index[h]: v for h, v in c.identities[x].items()} for x in objects)
    sub = LinCat(c.field, tuple(c.objects[x] for x in objects), basis, comp, identities, name=name)
    inclusion = LinFunctor(
        sub,
        c,
        objects,
        tuple({i: c.field.one} for i in kept),
        name=f"{name}⊂{c.name}" if name and c.name else "inclusion",
    )
    return sub, inclusion


def truncated_polynomial(field: Field, m: int, variable: str = "t") -> AlgebraView:
    """k[t]/(t^m) with basis 1, t, ..., t^{m-1}."""
    if m < 1:
        raise AlgebraError("Truncation degree must be at least 1")
    labels = tuple("1" if i == 0 else (variable if i == 1 else f"{variable}^{i}") for i in range(m))
    table = {(i, j): {i + j: field.one} for i in range(m) for j in range(m) if i + j < m}
    return AlgebraView(field, labels, table, {0: field.one}, name=f"k[{variable}]/({variable}^{m})")


def matrix_algebra(field: Field, n: int) -> AlgebraView:
    """M_n(k) on matrix units E_ij, stored at index i*n + j."""
    labels = tuple(f"E{i + 1}{j + 1}" for i in range(n) for j in range(n))
    table = {
        (i * n + j, j * n + l): {i * n + l: field.one}
        for i in range(n)
        for j in range(n)
        for l in range(n)
    }
    unit = {i * n + i: field.one for i in range(n)}
    return AlgebraView(field, labels, table, unit, name=f"M{n}(k)")


def field_algebra(field: Field) -> AlgebraView:
    return AlgebraView(field, ("1",), {(0, 0): {0: field.one}}, {0: field.one}, name="k")
