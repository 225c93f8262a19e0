"""G-gradings of finite categories by homogeneous bases."""

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from ..errors import GradingError
from ..group.finite_group import FiniteGroup
from ..lincat.category import LinCat
from ..lincat.validation import ValidationReport


@dataclass(frozen=True, eq=False)
class Grading:
    """``degree[i]`` is the group element of basis morphism i."""

    base: LinCat
    group: FiniteGroup
    degree: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.degree) != self.base.dimension:
            raise GradingError(
                f"Grading lists {len(self.degree)} degrees for {self.base.dimension} basis morphisms"
            )
        if any(not 0 <= s < self.group.order for s in self.degree):
            raise GradingError("Grading assigns a degree outside the group")

    @classmethod
    def trivial(cls, group: FiniteGroup, category: LinCat) -> "Grading":
        return cls(category, group, tuple(group.identity for _ in range(category.dimension)))

    @classmethod
    def from_labels(cls, group: FiniteGroup, category: LinCat, degrees: dict[str, str]) -> "Grading":
        """Grading from {basis label: element label}; unlisted labels get degree 1."""
        out = [group.identity] * category.dimension
        for label, element in degrees.items():
            if label not in category.label_index:
                raise GradingError(f"Grading refers to unknown basis label {label!r}")
            if str(element) not in group.index:
                raise GradingError(f"Grading refers to unknown group element {element!r}")
            out[category.label_index[label]] = group.index[str(element)]
        return cls(category, group, tuple(out))

    def block(self, target: int, source: int, s: int) -> tuple[int, ...]:
        """Basis of _{target}B^s_{source}."""
        return tuple(i for i in self.base.hom(target, source) if self.degree[i] == s)

    def product(self, morphisms: Sequence[int]) -> int:
        """Product of degrees, left to right."""
        return self.group.product([self.degree[i] for i in morphisms])

    @cached_property
    def is_trivial(self) -> bool:
        return all(s == self.group.identity for s in self.degree)

    def labels(self) -> dict[str, str]:
        return {b.label: self.group.labels[self.degree[i]] for i, b in enumerate(self.base.basis)}


def validate_grading(gr: Grading) -> ValidationReport:
    """deg(g∘f) = deg(g)·deg(f) on every nonzero composite of basis morphisms."""
    c, group = gr.base, gr.group
    report = ValidationReport(f"grading of {c.name or 'category'} by {group.name or 'G'}")
    for (g, f), value in c.comp.items():
        expected = group.mul(gr.degree[g], gr.degree[f])
        for h in value:
            if gr.degree[h] != expected:
                report.add(
                    "multiplicative",
                    f"{c.label(g)}∘{c.label(f)} has component {c.label(h)} of degree "
                    f"{group.labels[gr.degree[h]]}, expected {group.labels[expected]}",
                    c.label(g),
                    c.label(f),
                )
    for x, ident in enumerate(c.identities):
        for h in ident:
            if gr.degree[h] != group.identity:
                report.add("identity", f"1_{c.objects[x]} has a component of nontrivial degree", c.label(h))
    return report
