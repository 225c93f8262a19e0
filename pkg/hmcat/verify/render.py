"""Markdown reports rendered from a Jinja2 template."""

from pathlib import Path
from typing import Any

from jinja2 import BaseLoader, Environment, StrictUndefined, TemplateSyntaxError, UndefinedError

from ..config import ComputeProfile
from .output import VerifyMetrics
from .report import TheoremReport

TEMPLATES_DIR = Path(__file__).parent / "templates"


def _create_jinja_env() -> Environment:
    return Environment(
        loader=BaseLoader(),
        keep_trailing_newline=True,
        trim_blocks=True,
        lstrip_blocks=True,
        undefined=StrictUndefined,
    )


_jinja_env = _create_jinja_env()


def render_string(template_str: str, variables: dict[str, Any]) -> str:
    """Render a template string.

    Raises:
        ValueError: If the template is malformed or uses an undefined variable.
    """
    try:
        return _jinja_env.from_string(template_str).render(**variables)
    except TemplateSyntaxError as e:
        raise ValueError(f"Template syntax error at line {e.lineno}: {e.message}") from e
    except UndefinedError as e:
        raise ValueError(f"Undefined template variable: {e}") from e


def render_markdown(
    reports: list[TheoremReport],
    metrics: VerifyMetrics,
    profile: ComputeProfile,
    template: str | Path | None = None,
) -> str:
    """The run as Markdown: a summary, then one section per report."""
    path = Path(template) if template else TEMPLATES_DIR / "report.md.j2"
    return render_string(
        path.read_text(encoding="utf-8"),
        {
            "reports": [r.to_dict() for r in reports],
            "metrics": metrics.to_dict(),
            "profile": profile.to_dict(),
        },
    )
