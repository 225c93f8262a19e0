"""The skew category C[G] with its G-grading."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from ..errors import ActionError
from ..group.action import GroupAction, validate_action
from ..lincat.category import BasisMorphism, LinCat
from ..lincat.matrices import Vector
from ..lincat.scalars import Scalar
from ..lincat.validation import ValidationReport
from .grading import Grading

logger = logging.getLogger(__name__)

SkewKey = tuple[int, int, int]


@dataclass(frozen=True, eq=False)
class SkewCategory:
    """C[G] together with the action it was built from.

    Basis morphism i of ``category`` is ``keys[i] = (x, s, h)``: the C-basis
    morphism h ∈ _yC_{s·x} placed in degree s of _yC[G]_x.
    """

    action: GroupAction
    category: LinCat
    grading: Grading
    keys: tuple[SkewKey, ...]

    @cached_property
    def index(self) -> dict[SkewKey, int]:
        return {key: i for i, key in enumerate(self.keys)}

    def embed(self, x: int, s: int, vec: Mapping[int, Scalar]) -> Vector:
        """A morphism of _yC_{s·x} as a degree-s morphism of _yC[G]_x."""
        return {self.index[(x, s, h)]: v for h, v in vec.items()}

    def component(self, vec: Mapping[int, Scalar]) -> dict[int, Vector]:
        """Split a C[G] vector into its C-valued components by degree."""
        out: dict[int, Vector] = {}
        for i, v in vec.items():
            _, s, h = self.keys[i]
            out.setdefault(s, {})[h] = v
        return out


def skew_category(a: GroupAction, validate: bool = True, name: str = "") -> SkewCategory:
    """Build C[G]: same objects, _yC[G]_x = ⊕_s _yC_{s·x}, with (g, t)∘(f, s) = (g∘t·f, ts)."""
    if validate:
        validate_action(a).raise_if_invalid(ActionError)
    c, group = a.category, a.group

    keys: list[SkewKey] = []
    basis: list[BasisMorphism] = []
    for y, x in c.hom_pairs():
        for s in group.elements:
            for h in c.hom(y, a.act_object(s, x)):
                keys.append((x, s, h))
                basis.append(BasisMorphism(f"({c.label(h)},{group.labels[s]})", x, y))
    index = {key: i for i, key in enumerate(keys)}

    starting_at: list[list[int]] = [[] for _ in c.objects]
    for i, b in enumerate(basis):
        starting_at[b.source].append(i)

    comp: dict[tuple[int, int], Vector] = {}
    for fi, (x, s, hf) in enumerate(keys):
        y = basis[fi].target
        for gi in starting_at[y]:
            _, t, hg = keys[gi]
            # g ∘ (t·f) lands in _zC_{ts·x}
            twisted = c.compose({hg: c.field.one}, a.act_basis(t, hf))
            if twisted:
                ts = group.mul(t, s)
                comp[(gi, fi)] = {index[(x, ts, h)]: v for h, v in twisted.items()}

    identities = tuple({index[(x, group.identity, h)]: v for h, v in ident.items()} for x, ident in enumerate(c.identities))
    label = name or (f"{c.name}[{group.name}]" if c.name and group.name else "")
    category = LinCat(c.field, c.objects, tuple(basis), comp, identities, name=label)
    grading = Grading(category, group, tuple(s for _, s, _ in keys))
    logger.debug(f"skew category {label or ''}: dim {len(keys)} from dim {c.dimension}")
    return SkewCategory(a, category, grading, tuple(keys))


@dataclass(frozen=True)
class OrbitIsomorphism:
    """1_{t·x} in degree t and 1_x in degree t⁻¹, mutually inverse in C[G]."""

    source: int
    target: int
    element: int
    forward: Vector
    backward: Vector


def orbit_isomorphisms(skew: SkewCategory) -> tuple[OrbitIsomorphism, ...]:
    """Isomorphisms x ≅ t·x in C[G] for every object x and element t ≠ 1."""
    a, c = skew.action, skew.action.category
    group = a.group
    out = []
    for x in range(len(c.objects)):
        for t in group.elements:
            if t == group.identity:
                continue
            tx = a.act_object(t, x)
            forward = skew.embed(x, t, c.identities[tx])
            backward = skew.embed(tx, group.inverse(t), c.identities[x])
            out.append(OrbitIsomorphism(x, tx, t, forward, backward))
    return tuple(out)


def check_orbit_isomorphisms(skew: SkewCategory) -> ValidationReport:
    d = skew.category
    labels = skew.action.group.labels
    report = ValidationReport(f"orbit isomorphisms in {d.name or 'C[G]'}")
    for iso in orbit_isomorphisms(skew):
        if d.compose(iso.backward, iso.forward) != d.identities[iso.source]:
            report.add(
                "inverse",
                f"1_{d.objects[iso.source]} in degree {labels[iso.element]}⁻¹ is not a left inverse",
                d.objects[iso.source],
                labels[iso.element],
            )
        if d.compose(iso.forward, iso.backward) != d.identities[iso.target]:
            report.add(
                "inverse",
                f"1_{d.objects[iso.target]} in degree {labels[iso.element]} is not a left inverse",
                d.objects[iso.target],
                labels[iso.element],
            )
    return report
