"""Run directories, report logs and plain-text summaries."""

import json
import os
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any

from .report import TheoremReport, Verdict


@dataclass
class VerifyMetrics:
    """Verdict counts for a verification run."""

    total: int = 0
    verified: int = 0
    hypothesis_not_met: int = 0
    failed: int = 0
    truncated: int = 0
    by_theorem: dict[str, dict[str, int]] = field(default_factory=dict)

    def add_report(self, report: TheoremReport) -> None:
        verdict = report.verdict
        self.total += 1
        if verdict is Verdict.VERIFIED:
            self.verified += 1
        elif verdict is Verdict.HYPOTHESIS_NOT_MET:
            self.hypothesis_not_met += 1
        else:
            self.failed += 1
        if report.truncated:
            self.truncated += 1
        counts = self.by_theorem.setdefault(report.theorem, {v.value: 0 for v in Verdict})
        counts[verdict.value] += 1

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "total": self.total,
            "verified": self.verified,
            "hypothesis_not_met": self.hypothesis_not_met,
            "failed": self.failed,
            "truncated": self.truncated,
            "by_theorem": self.by_theorem,
        }


def create_run_dir(base_dir: Path | str) -> Path:
    """Create a timestamped run directory and point ``latest`` at it."""
    base_dir = Path(base_dir)
    base_dir.mkdir(parents=True, exist_ok=True)

    timestamp = datetime.now().strftime("%Y%m%d-%H%M%S")
    run_dir = base_dir / f"run-{timestamp}"
    run_dir.mkdir(parents=True, exist_ok=True)

    latest_link = base_dir / "latest"
    if latest_link.is_symlink() or latest_link.exists():
        latest_link.unlink()
    os.symlink(run_dir.name, latest_link)

    return run_dir


def append_report(report: TheoremReport, output_dir: Path | str) -> None:
    """Append one report to reports.jsonl."""
    with open(Path(output_dir) / "reports.jsonl", "a", encoding="utf-8") as f:
        f.write(json.dumps(report.to_dict(), ensure_ascii=False) + "\n")


def update_overall(metrics: VerifyMetrics, output_dir: Path | str) -> None:
    """Rewrite overall.json and summary.txt from the current counts."""
    output_dir = Path(output_dir)

    with open(output_dir / "overall.json", "w", encoding="utf-8") as f:
        json.dump(metrics.to_dict(), f, indent=2, ensure_ascii=False)

    with open(output_dir / "summary.txt", "w", encoding="utf-8") as f:
        f.write(format_summary(metrics))
        f.write("\n")


def save_run_config(config: dict[str, Any], output_dir: Path | str) -> None:
    with open(Path(output_dir) / "config.json", "w", encoding="utf-8") as f:
        json.dump(config, f, indent=2, ensure_ascii=False)


def format_summary(metrics: VerifyMetrics) -> str:
    lines = [
        "=" * 55,
        "Theorem Verification Results",
        "=" * 55,
        f"Total checks:        {metrics.total}",
        f"Verified:            {metrics.verified}",
        f"Hypothesis not met:  {metrics.hypothesis_not_met}",
        f"FAILED:              {metrics.failed}",
        f"Truncated:           {metrics.truncated}",
        "",
        "By Theorem:",
    ]
    for theorem in sorted(metrics.by_theorem):
        counts = metrics.by_theorem[theorem]
        lines.append(
            f"  {theorem:22s}  {counts[Verdict.VERIFIED.value]:>3d} verified"
            f"  {counts[Verdict.HYPOTHESIS_NOT_MET.value]:>3d} not met"
            f"  {counts[Verdict.FAILED.value]:>3d} FAILED"
        )
    lines.append("=" * 55)
    return "\n".join(lines)
