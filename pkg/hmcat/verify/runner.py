"""Concurrent execution of theorem checks."""

import asyncio
import logging
from pathlib import Path
from typing import Callable

from ..config import ComputeProfile
from .base import CheckRequest
from .output import VerifyMetrics, append_report, update_overall
from .registry import CheckRegistry
from .report import TheoremReport

logger = logging.getLogger(__name__)


class VerifyRunner:
    """Runs independent checks concurrently; each check is sequential inside.

    Checks are CPU-bound and run in worker threads; reports come back in
    request order whatever order they finish in.
    """

    def __init__(self, registry: CheckRegistry, profile: ComputeProfile) -> None:
        self.registry = registry
        self.profile = profile

    async def run_check(self, request: CheckRequest) -> tuple[int, TheoremReport]:
        report = await asyncio.to_thread(
            self.registry.dispatch, request.theorem, request.document, self.profile, request.fixture
        )
        return request.index, report

    async def run_checks(
        self,
        requests: list[CheckRequest],
        output_dir: Path | str | None = None,
        progress_callback: Callable[[int, int], None] | None = None,
    ) -> tuple[list[TheoremReport], VerifyMetrics]:
        metrics = VerifyMetrics()
        done: list[tuple[int, TheoremReport]] = []
        semaphore = asyncio.Semaphore(max(1, self.profile.parallel))

        async def run_with_semaphore(request: CheckRequest) -> tuple[int, TheoremReport]:
            async with semaphore:
                return await self.run_check(request)

        pending = [run_with_semaphore(request) for request in requests]
        for coro in asyncio.as_completed(pending):
            index, report = await coro
            done.append((index, report))
            metrics.add_report(report)
            logger.info(f"{report.theorem} on {report.fixture}: {report.verdict.value}")

            if output_dir is not None:
                append_report(report, output_dir)
                update_overall(metrics, output_dir)

            if progress_callback:
                progress_callback(len(done), len(requests))

        done.sort(key=lambda item: item[0])
        return [report for _, report in done], metrics
