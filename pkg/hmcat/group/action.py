"""Group actions on finite k-linear categories and on algebras."""

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from sympy.polys.matrices import DomainMatrix

from ..errors import ActionError
from ..lincat.algebra import AlgebraView, single_object_category, total_algebra
from ..lincat.category import LinCat
from ..lincat.matrices import Vector, add_scaled, from_columns
from ..lincat.scalars import Scalar
from ..lincat.validation import ValidationReport
from .finite_group import FiniteGroup


@dataclass(frozen=True, eq=False)
class GroupAction:
    """G acting on C by k-linear automorphisms.

    ``object_perm[s][x]`` is s·x and ``images[s][f]`` is s·f for a basis
    morphism f, a vector in _{s·y}C_{s·x}.
    """

    group: FiniteGroup
    category: LinCat
    object_perm: tuple[tuple[int, ...], ...]
    images: tuple[tuple[Vector, ...], ...]

    def __post_init__(self) -> None:
        n_obj, dim = len(self.category.objects), self.category.dimension
        if len(self.object_perm) != self.group.order or len(self.images) != self.group.order:
            raise ActionError("Action data must list every group element")
        for s in self.group.elements:
            if sorted(self.object_perm[s]) != list(range(n_obj)):
                raise ActionError(f"{self.group.labels[s]} does not permute the objects")
            if len(self.images[s]) != dim:
                raise ActionError(
                    f"{self.group.labels[s]} gives {len(self.images[s])} basis images for {dim} basis vectors"
                )
            for img in self.images[s]:
                if any(not 0 <= h < dim for h in img):
                    raise ActionError(f"{self.group.labels[s]} maps outside the hom bases")

    @classmethod
    def trivial(cls, group: FiniteGroup, category: LinCat) -> "GroupAction":
        perm = tuple(range(len(category.objects)))
        images = tuple(category.basis_vector(i) for i in range(category.dimension))
        return cls(group, category, tuple(perm for _ in group.elements), tuple(images for _ in group.elements))

    @classmethod
    def from_generators(
        cls,
        group: FiniteGroup,
        category: LinCat,
        generators: Mapping[int, tuple[Sequence[int], Sequence[Vector]]],
    ) -> "GroupAction":
        """Extend action data given on some elements to the whole group by products."""
        n_obj, dim = len(category.objects), category.dimension
        perms: dict[int, tuple[int, ...]] = {0: tuple(range(n_obj))}
        images: dict[int, tuple[Vector, ...]] = {0: tuple(category.basis_vector(i) for i in range(dim))}
        gens = {g: (tuple(p), tuple(dict(v) for v in imgs)) for g, (p, imgs) in generators.items()}
        for g, (p, imgs) in gens.items():
            if len(p) != n_obj or len(imgs) != dim:
                raise ActionError(f"Generator {group.labels[g]} has data of the wrong size")
        frontier = [0]
        while frontier:
            a = frontier.pop(0)
            for g, (p, imgs) in gens.items():
                b = group.mul(g, a)
                perm = tuple(p[perms[a][x]] for x in range(n_obj))
                img = tuple(_apply_images(imgs, images[a][f]) for f in range(dim))
                if b in perms:
                    if perms[b] != perm or images[b] != img:
                        raise ActionError(
                            f"Generator data is not a group action: two products give different actions of {group.labels[b]}"
                        )
                    continue
                perms[b], images[b] = perm, img
                frontier.append(b)
        missing = [group.labels[s] for s in group.elements if s not in perms]
        if missing:
            raise ActionError(f"Generators do not reach {', '.join(missing)}")
        return cls(
            group,
            category,
            tuple(perms[s] for s in group.elements),
            tuple(images[s] for s in group.elements),
        )

    def act_object(self, s: int, x: int) -> int:
        return self.object_perm[s][x]

    def act_basis(self, s: int, f: int) -> Vector:
        return self.images[s][f]

    def act(self, s: int, vec: Mapping[int, Scalar]) -> Vector:
        return _apply_images(self.images[s], vec)

    def matrix(self, s: int) -> DomainMatrix:
        """Action of s on the global basis of C."""
        return from_columns(self.images[s], self.category.dimension, self.category.field)

    def stabilizer(self, x: int) -> tuple[int, ...]:
        return tuple(s for s in self.group.elements if self.object_perm[s][x] == x)

    @cached_property
    def is_free(self) -> bool:
        return all(len(self.stabilizer(x)) == 1 for x in range(len(self.category.objects)))


def _apply_images(images: Sequence[Mapping[int, Scalar]], vec: Mapping[int, Scalar]) -> Vector:
    out: Vector = {}
    for f, c in vec.items():
        add_scaled(out, images[f], c)
    return out


def validate_action(a: GroupAction) -> ValidationReport:
    """Functoriality in G, hom-block compatibility, composition and identities."""
    group, c = a.group, a.category
    report = ValidationReport(f"action of {group.name or 'G'} on {c.name or 'C'}")
    labels = group.labels

    for f in range(c.dimension):
        if a.images[0][f] != c.basis_vector(f):
            report.add("identity-element", f"1 does not fix {c.label(f)}", labels[0], c.label(f))
    for x in range(len(c.objects)):
        if a.object_perm[0][x] != x:
            report.add("identity-element", f"1 moves object {c.objects[x]}", labels[0], c.objects[x])

    for s in group.elements:
        for f, b in enumerate(c.basis):
            ty, tx = a.object_perm[s][b.target], a.object_perm[s][b.source]
            for h in a.images[s][f]:
                if c.basis[h].target != ty or c.basis[h].source != tx:
                    report.add(
                        "block",
                        f"{labels[s]}·{b.label} has a component {c.label(h)} outside "
                        f"_{c.objects[ty]}C_{c.objects[tx]}",
                        labels[s],
                        b.label,
                    )
        for x, ident in enumerate(c.identities):
            if a.act(s, ident) != c.identities[a.object_perm[s][x]]:
                report.add("identity", f"{labels[s]}·1_{c.objects[x]} ≠ 1_{{s·x}}", labels[s], c.objects[x])
        for f, bf in enumerate(c.basis):
            for g in c.by_source[bf.target]:
                left = a.act(s, c.compose_basis(g, f))
                right = c.compose(a.images[s][g], a.images[s][f])
                if left != right:
                    report.add(
                        "composition",
                        f"{labels[s]}·({c.label(g)}∘{bf.label}) ≠ ({labels[s]}·{c.label(g)})∘({labels[s]}·{bf.label})",
                        labels[s],
                        c.label(g),
                        bf.label,
                    )

    for s in group.elements:
        for t in group.elements:
            st = group.mul(s, t)
            for x in range(len(c.objects)):
                if a.object_perm[st][x] != a.object_perm[s][a.object_perm[t][x]]:
                    report.add(
                        "functoriality",
                        f"({labels[s]}{labels[t]})·{c.objects[x]} ≠ {labels[s]}·({labels[t]}·{c.objects[x]})",
                        labels[s],
                        labels[t],
                        c.objects[x],
                    )
            for f in range(c.dimension):
                if a.images[st][f] != a.act(s, a.images[t][f]):
                    report.add(
                        "functoriality",
                        f"({labels[s]}{labels[t]})·{c.label(f)} ≠ {labels[s]}·({labels[t]}·{c.label(f)})",
                        labels[s],
                        labels[t],
                        c.label(f),
                    )
    return report


@dataclass(frozen=True, eq=False)
class AlgebraAction:
    """G acting on an algebra Λ; ``images[s][i]`` is s·e_i."""

    group: FiniteGroup
    algebra: AlgebraView
    images: tuple[tuple[Vector, ...], ...]

    def act(self, s: int, vec: Mapping[int, Scalar]) -> Vector:
        return _apply_images(self.images[s], vec)

    @classmethod
    def from_generators(
        cls, group: FiniteGroup, algebra: AlgebraView, generators: Mapping[int, Sequence[Vector]]
    ) -> "AlgebraAction":
        lam = single_object_category(algebra)
        action = GroupAction.from_generators(
            group, lam, {g: ((0,), imgs) for g, imgs in generators.items()}
        )
        return cls(group, algebra, action.images)

    def on_single_object(self, lam: LinCat) -> GroupAction:
        """The same action on Λ₁ (one object, fixed by every element)."""
        return GroupAction(self.group, lam, tuple((0,) for _ in self.group.elements), self.images)


def validate_algebra_action(a: AlgebraAction) -> ValidationReport:
    """Action by unital algebra automorphisms, functorial in G."""
    group, alg = a.group, a.algebra
    report = ValidationReport(f"action of {group.name or 'G'} on {alg.name or 'Λ'}")
    if len(a.images) != group.order or any(len(imgs) != alg.dimension for imgs in a.images):
        raise ActionError("Algebra action must give an image of every basis vector for every element")
    for s in group.elements:
        if a.act(s, alg.unit) != alg.unit:
            report.add("unit", f"{group.labels[s]} does not fix the unit", group.labels[s])
        for i in range(alg.dimension):
            for j in range(alg.dimension):
                left = a.act(s, alg.table.get((i, j), {}))
                right = alg.multiply(a.images[s][i], a.images[s][j])
                if left != right:
                    report.add(
                        "multiplicative",
                        f"{group.labels[s]}·({alg.labels[i]}{alg.labels[j]}) ≠ "
                        f"({group.labels[s]}·{alg.labels[i]})({group.labels[s]}·{alg.labels[j]})",
                        group.labels[s],
                        alg.labels[i],
                        alg.labels[j],
                    )
        for t in group.elements:
            st = group.mul(s, t)
            for i in range(alg.dimension):
                if a.images[st][i] != a.act(s, a.images[t][i]):
                    report.add(
                        "functoriality",
                        f"({group.labels[s]}{group.labels[t]})·{alg.labels[i]} ≠ "
                        f"{group.labels[s]}·({group.labels[t]}·{alg.labels[i]})",
                        group.labels[s],
                        group.labels[t],
                        alg.labels[i],
                    )
    for i in range(alg.dimension):
        if a.images[0][i] != alg.basis_vector(i):
            report.add("identity-element", f"1 does not fix {alg.labels[i]}", alg.labels[i])
    return report


def induced_algebra_action(action: GroupAction) -> AlgebraAction:
    """The action of G on a(C) by the same basis images."""
    return AlgebraAction(action.group, total_algebra(action.category), action.images)
