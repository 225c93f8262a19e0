"""Check registry for storing and dispatching theorem checks."""

import logging

from ..config import ComputeProfile
from ..errors import NonFreeActionError
from ..io import Document
from .base import TheoremCheck
from .report import Hypothesis, TheoremReport, Verdict

logger = logging.getLogger(__name__)


class CheckRegistry:
    """Registry that stores theorem checks and dispatches runs."""

    def __init__(self) -> None:
        self._checks: dict[str, TheoremCheck] = {}

    def register(self, check: TheoremCheck) -> None:
        self._checks[check.name] = check

    def get(self, name: str) -> TheoremCheck | None:
        return self._checks.get(name)

    def ids(self) -> list[str]:
        return list(self._checks)

    def dispatch(self, theorem: str, doc: Document | None, profile: ComputeProfile, fixture: str = "") -> TheoremReport:
        """Run one check; unknown ids and unexpected exceptions become FAILED reports.

        A NonFreeActionError from a check that requires a free action is a
        hypothesis failure, not a FAILED verdict.
        """
        field = doc.category.field.name if doc is not None else profile.base_field.name
        check = self._checks.get(theorem)
        if check is None:
            return TheoremReport(
                theorem,
                fixture,
                field=field,
                max_degree=profile.max_degree,
                error=f"Unknown theorem: {theorem}. Available: {', '.join(self._checks)}",
            )
        if check.needs_document and doc is None:
            return TheoremReport(
                theorem, fixture, field=field, max_degree=profile.max_degree, error=f"{theorem} needs a document"
            )

        try:
            report = check.run(doc, profile, fixture)
        except NonFreeActionError as e:
            logger.info(f"{theorem} on {fixture}: {e}")
            return TheoremReport(
                theorem,
                fixture,
                field=field,
                max_degree=profile.max_degree,
                hypotheses={Hypothesis.FREE: False},
                required=(Hypothesis.FREE,),
                routing=[str(e)],
                forced=Verdict.HYPOTHESIS_NOT_MET,
            )
        except Exception as e:
            logger.warning(f"{theorem} on {fixture} failed: {type(e).__name__}: {e}")
            return TheoremReport(
                theorem,
                fixture,
                field=field,
                max_degree=profile.max_degree,
                error=f"{type(e).__name__}: {e}",
            )
        logger.debug(f"{theorem} on {fixture}: {report.verdict.value}")
        return report

    def __len__(self) -> int:
        return len(self._checks)

    def __contains__(self, name: str) -> bool:
        return name in self._checks
