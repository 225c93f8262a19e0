"""Axiom checks that report violations instead of raising."""

from dataclasses import dataclass, field
from typing import Any

from ..errors import HmcatError
from .category import LinCat


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance, with the basis labels that witness it."""

    kind: str
    message: str
    witness: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "message": self.message, "witness": list(self.witness)}


@dataclass
class ValidationReport:
    subject: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, message: str, *witness: str) -> None:
        self.violations.append(Violation(kind, message, tuple(witness)))

    def extend(self, other: "ValidationReport") -> None:
        self.violations.extend(other.violations)

    def raise_if_invalid(self, error: type[HmcatError]) -> None:
        if self.violations:
            first = self.violations[0]
            more = f" (and {len(self.violations) - 1} more)" if len(self.violations) > 1 else ""
            raise error(f"{self.subject}: {first.message}{more}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "violations": [v.to_dict() for v in self.violations],
        }


def validate_category(c: LinCat) -> ValidationReport:
    """Check block structure, identity laws and associativity on basis triples."""
    report = ValidationReport(f"category {c.name or ''}".strip())
    basis = c.basis

    for (g, f), value in c.comp.items():
        if basis[g].source != basis[f].target:
            report.add(
                "block",
                f"{basis[g].label}∘{basis[f].label} is defined but the pair is not composable",
                basis[g].label,
                basis[f].label,
            )
            continue
        target, source = basis[g].target, basis[f].source
        for h in value:
            if basis[h].target != target or basis[h].source != source:
                report.add(
                    "block",
                    f"{basis[g].label}∘{basis[f].label} has a component {basis[h].label} "
                    f"outside _{c.objects[target]}C_{c.objects[source]}",
                    basis[g].label,
                    basis[f].label,
                )

    for x, ident in enumerate(c.identities):
        for h in ident:
            if basis[h].source != x or basis[h].target != x:
                report.add(
                    "identity",
                    f"identity of {c.objects[x]} has a component {basis[h].label} outside its endomorphisms",
                    basis[h].label,
                )

    for f, b in enumerate(basis):
        single = c.basis_vector(f)
        if c.compose(c.identities[b.target], single) != single:
            report.add("identity", f"1_{c.objects[b.target]}∘{b.label} ≠ {b.label}", b.label)
        if c.compose(single, c.identities[b.source]) != single:
            report.add("identity", f"{b.label}∘1_{c.objects[b.source]} ≠ {b.label}", b.label)

    for f, bf in enumerate(basis):
        for g in c.by_source[bf.target]:
            gf = c.compose_basis(g, f)
            for h in c.by_source[basis[g].target]:
                left = c.compose(c.compose_basis(h, g), c.basis_vector(f))
                right = c.compose(c.basis_vector(h), gf)
                if left != right:
                    report.add(
                        "associativity",
                        f"({basis[h].label}∘{basis[g].label})∘{bf.label} ≠ "
                        f"{basis[h].label}∘({basis[g].label}∘{bf.label})",
                        basis[h].label,
                        basis[g].label,
                        bf.label,
                    )
    return report
