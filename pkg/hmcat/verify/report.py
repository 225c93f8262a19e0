"""Theorem reports: comparison rows, hypothesis flags and the verdict."""

import dataclasses
from dataclasses import dataclass
from enum import Enum
from typing import Any, Sequence


class Verdict(str, Enum):
    VERIFIED = "verified"
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"
    FAILED = "FAILED"


class Hypothesis(str, Enum):
    """Hypothesis flags a comparison may depend on.

    FREE: G acts freely on objects
    ORDER_INVERTIBLE: |G| is a unit in k, so (co)invariants are exact
    GRADING_VALID: the grading is multiplicative and homogeneous
    """

    FREE = "free"
    ORDER_INVERTIBLE = "order-invertible"
    GRADING_VALID = "grading-valid"


class RowStatus(str, Enum):
    HOLDS = "holds"
    DIFFERS = "differs"
    NOT_APPLICABLE = "n/a"


@dataclass
class ComparisonRow:
    """One compared statement of a theorem.

    Dimension rows compare ``left`` and ``right`` degree by degree with
    ``relation`` ("=" or "<="); check rows carry ``failures`` instead. Rows
    listing ``requires`` only count when those hypotheses hold.
    """

    label: str
    left: tuple[int, ...] = ()
    right: tuple[int, ...] = ()
    left_name: str = ""
    right_name: str = ""
    relation: str = "="
    failures: list[str] = dataclasses.field(default_factory=list)
    requires: tuple[Hypothesis, ...] = ()
    truncated: bool = False
    is_check: bool = False

    @classmethod
    def dims(
        cls,
        label: str,
        left: Sequence[int],
        right: Sequence[int],
        left_name: str = "",
        right_name: str = "",
        *,
        relation: str = "=",
        requires: Sequence[Hypothesis] = (),
        truncated: bool = False,
    ) -> "ComparisonRow":
        left, right = tuple(left), tuple(right)
        n = min(len(left), len(right))
        return cls(
            label,
            left[:n],
            right[:n],
            left_name,
            right_name,
            relation=relation,
            requires=tuple(requires),
            truncated=truncated or len(left) != len(right),
        )

    @classmethod
    def check(cls, label: str, failures: Sequence[str], *, requires: Sequence[Hypothesis] = ()) -> "ComparisonRow":
        return cls(label, failures=list(failures), requires=tuple(requires), is_check=True)

    def _degree_holds(self, n: int) -> bool:
        if self.relation == "<=":
            return self.left[n] <= self.right[n]
        return self.left[n] == self.right[n]

    @property
    def holds(self) -> bool:
        if self.failures:
            return False
        return all(self._degree_holds(n) for n in range(len(self.left)))

    def witness(self) -> dict[str, Any] | None:
        """The first failing degree with both sides, or the first failure message."""
        if self.failures:
            return {"row": self.label, "failure": self.failures[0], "count": len(self.failures)}
        for n in range(len(self.left)):
            if not self._degree_holds(n):
                return {"row": self.label, "degree": n, "left": self.left[n], "right": self.right[n]}
        return None

    def status(self, hypotheses: dict[Hypothesis, bool]) -> RowStatus:
        if not all(hypotheses.get(h, False) for h in self.requires):
            return RowStatus.NOT_APPLICABLE
        return RowStatus.HOLDS if self.holds else RowStatus.DIFFERS

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"label": self.label}
        if self.is_check:
            out["failures"] = list(self.failures)
        else:
            out.update(
                {
                    "left_name": self.left_name,
                    "right_name": self.right_name,
                    "relation": self.relation,
                    "left": list(self.left),
                    "right": list(self.right),
                }
            )
        out["holds"] = self.holds
        if self.requires:
            out["requires"] = [h.value for h in self.requires]
        if self.truncated:
            out["truncated"] = True
        return out


@dataclass
class TheoremReport:
    """Outcome of one theorem check on one fixture."""

    theorem: str
    fixture: str
    field: str = ""
    max_degree: int = 0
    rows: list[ComparisonRow] = dataclasses.field(default_factory=list)
    hypotheses: dict[Hypothesis, bool] = dataclasses.field(default_factory=dict)
    required: tuple[Hypothesis, ...] = ()
    routing: list[str] = dataclasses.field(default_factory=list)
    error: str | None = None
    forced: Verdict | None = None

    def add(self, row: ComparisonRow) -> ComparisonRow:
        self.rows.append(row)
        return row

    def unmet(self) -> list[Hypothesis]:
        needed = list(self.required)
        for row in self.rows:
            needed.extend(row.requires)
        return [h for h in dict.fromkeys(needed) if not self.hypotheses.get(h, False)]

    @property
    def verdict(self) -> Verdict:
        """FAILED on any unconditioned difference, else hypothesis-not-met on
        any unmet hypothesis, else FAILED on any conditioned difference."""
        if self.error is not None:
            return Verdict.FAILED
        if self.forced is not None:
            return self.forced
        if any(not row.requires and not row.holds for row in self.rows):
            return Verdict.FAILED
        if self.unmet():
            return Verdict.HYPOTHESIS_NOT_MET
        if any(not row.holds for row in self.rows):
            return Verdict.FAILED
        return Verdict.VERIFIED

    @property
    def truncated(self) -> bool:
        return any(row.truncated for row in self.rows)

    def witnesses(self) -> list[dict[str, Any]]:
        out = []
        for row in self.rows:
            if row.status(self.hypotheses) is RowStatus.DIFFERS:
                w = row.witness()
                if w is not None:
                    out.append(w)
        return out

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "theorem": self.theorem,
            "fixture": self.fixture,
            "field": self.field,
            "max_degree": self.max_degree,
            "verdict": self.verdict.value,
            "hypotheses": {h.value: v for h, v in self.hypotheses.items()},
        }
        if self.required:
            data["required"] = [h.value for h in self.required]
        if self.routing:
            data["routing"] = list(self.routing)
        data["rows"] = [row.to_dict() | {"status": row.status(self.hypotheses).value} for row in self.rows]
        witnesses = self.witnesses()
        if witnesses:
            data["witnesses"] = witnesses
        if self.truncated:
            data["truncated"] = True
        if self.error:
            data["error"] = self.error
        return data
