"""CLI entry point for hmcat."""

import asyncio
import json
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, Any, Iterator, Optional

import typer
import yaml
from dotenv import load_dotenv

# Load .env before anything else so HMCAT_* variables are available for defaults
load_dotenv()
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table

from .cohomology.classes import class_cohomology, class_decomposition_cochains
from .cohomology.cochains import cochain_complex
from .cohomology.cup import cup
from .cohomology.invariants import attach_g_action_cochains, invariant_complex
from .cohomology.ranks import cohomology, cohomology_representation
from .config import ComputeProfile, OutputFormat, TransversalMode, list_profiles
from .constructions.grading import validate_grading
from .constructions.quotient import quotient_category
from .constructions.resolving import resolving_category
from .constructions.skew import skew_category
from .constructions.transversal import transversal_subcategory
from .errors import HmcatError
from .group.action import validate_action
from .group.orbits import orbits_transversal
from .group.representations import coinvariants, invariants
from .homology.chains import attach_g_action, bar_complex
from .homology.classes import class_decomposition, class_homology
from .homology.coinvariants import coinvariant_complex
from .homology.ranks import homology, homology_representation
from .io import Document, cochain_to_dict, dump_document, load_cochain
from .lincat.scalars import Field
from .lincat.validation import validate_category
from .verify.base import CheckRequest
from .verify.checks import default_registry
from .verify.fixtures import fixture_description, list_fixtures, load_fixture
from .verify.output import create_run_dir, format_summary, save_run_config
from .verify.random_categories import random_documents
from .verify.registry import CheckRegistry
from .verify.render import render_markdown
from .verify.report import RowStatus, TheoremReport, Verdict
from .verify.runner import VerifyRunner

RANDOM_THEOREMS = ("graded-decomposition", "skew-homology", "skew-cohomology")

VERDICT_STYLES = {
    Verdict.VERIFIED: "green",
    Verdict.HYPOTHESIS_NOT_MET: "yellow",
    Verdict.FAILED: "bold red",
}

console = Console()
err_console = Console(stderr=True)

app = typer.Typer(
    name="hmcat",
    help="Exact Hochschild-Mitchell (co)homology of finite k-linear G-categories.",
    add_completion=False,
)


@app.callback()
def configure(
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Debug logging")] = False,
) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=verbose)],
        force=True,
    )


@contextmanager
def _errors() -> Iterator[None]:
    """Turn library errors into a red message and exit code 1."""
    try:
        yield
    except (HmcatError, ValueError, FileNotFoundError) as e:
        console.print(f"[red]{escape(str(e))}[/red]")
        raise typer.Exit(1) from e


def _field(field: str | None) -> Field | None:
    return Field.parse(field) if field else None


def _load(file: str, field: str | None) -> Document:
    return load_fixture(file, _field(field))


def _require_action(doc: Document):
    if doc.action is None:
        raise ValueError("Document has no action section")
    return doc.action


def _transversal(doc: Document, transversal: str | None) -> tuple[str, ...] | None:
    if transversal:
        return tuple(x.strip() for x in transversal.split(",") if x.strip())
    return doc.transversal


def _emit(data: Any, fmt: OutputFormat) -> None:
    if fmt is OutputFormat.JSON:
        console.print_json(json.dumps(data, ensure_ascii=False))
    else:
        console.print(escape(yaml.safe_dump(data, sort_keys=False, allow_unicode=True)), end="", soft_wrap=True)


def _write_document(doc: Document, output: str | None) -> None:
    text = dump_document(doc, output)
    if output:
        console.print(f"Wrote {escape(output)} ({doc.category.dimension} basis morphisms)")
    else:
        console.print(escape(text), end="", soft_wrap=True)


# Structures


@app.command()
def validate(
    file: Annotated[str, typer.Argument(help="Document path or packaged fixture name")],
    field: Annotated[Optional[str], typer.Option("--field", "-k", help="Rebind scalars to F_p or Q")] = None,
) -> None:
    """Check category axioms, the action and the grading of a document."""
    with _errors():
        doc = _load(file, field)
        reports = [validate_category(doc.category)]
        if doc.action is not None:
            reports.append(validate_action(doc.action))
        if doc.grading is not None:
            reports.append(validate_grading(doc.grading))

    table = Table(title=escape(doc.name or file))
    table.add_column("subject")
    table.add_column("kind")
    table.add_column("message")
    ok = True
    for report in reports:
        if report.ok:
            table.add_row(escape(report.subject), "", "[green]ok[/green]")
        for v in report.violations:
            ok = False
            table.add_row(escape(report.subject), v.kind, f"[red]{escape(v.message)}[/red]")
    console.print(table)
    if not ok:
        raise typer.Exit(1)


@app.command()
def skew(
    file: Annotated[str, typer.Argument(help="Document path or packaged fixture name")],
    output: Annotated[Optional[str], typer.Option("--output", "-o", help="Write the result here")] = None,
    field: Annotated[Optional[str], typer.Option("--field", "-k", help="Rebind scalars to F_p or Q")] = None,
) -> None:
    """Build the skew category C[G] with its G-grading."""
    with _errors():
        doc = _load(file, field)
        a = _require_action(doc)
        s = skew_category(a, name=f"{doc.name}[G]" if doc.name else "")
        _write_document(Document(s.category, a.group, None, s.grading, name=s.category.name), output)


@app.command()
def quotient(
    file: Annotated[str, typer.Argument(help="Document path or packaged fixture name")],
    output: Annotated[Optional[str], typer.Option("--output", "-o", help="Write the result here")] = None,
    transversal: Annotated[Optional[str], typer.Option("--transversal", "-t", help="Orbit representatives, comma separated")] = None,
    field: Annotated[Optional[str], typer.Option("--field", "-k", help="Rebind scalars to F_p or Q")] = None,
) -> None:
    """Build C/G for a free action, graded by the transversal."""
    with _errors():
        doc = _load(file, field)
        a = _require_action(doc)
        q = quotient_category(a, orbits_transversal(a, _transversal(doc, transversal)))
        _write_document(Document(q.category, a.group, None, q.grading, name=q.category.name), output)


@app.command()
def resolve(
    file: Annotated[str, typer.Argument(help="Document path or packaged fixture name")],
    output: Annotated[Optional[str], typer.Option("--output", "-o", help="Write the result here")] = None,
    field: Annotated[Optional[str], typer.Option("--field", "-k", help="Rebind scalars to F_p or Q")] = None,
) -> None:
    """Build the resolving category M_G(C) with its free action."""
    with _errors():
        doc = _load(file, field)
        a = _require_action(doc)
        m = resolving_category(a)
        _write_document(Document(m.category, a.group, m.action, name=m.category.name), output)


@app.command("transversal")
def transversal_cmd(
    file: Annotated[str, typer.Argument(help="Document path or packaged fixture name")],
    output: Annotated[Optional[str], typer.Option("--output", "-o", help="Write the result here")] = None,
    transversal: Annotated[Optional[str], typer.Option("--transversal", "-t", help="Orbit representatives, comma separated")] = None,
    field: Annotated[Optional[str], typer.Option("--field", "-k", help="Rebind scalars to F_p or Q")] = None,
) -> None:
    """Build the full subcategory C_T[G] of C[G] on a transversal."""
    with _errors():
        doc = _load(file, field)
        a = _require_action(doc)
        ts = transversal_subcategory(skew_category(a), orbits_transversal(a, _transversal(doc, transversal)))
        _write_document(Document(ts.category, a.group, None, ts.grading, name=ts.category.name), output)


# (Co)homology


def _dimension_table(title: str, columns: dict[str, tuple[int, ...]], truncated: bool) -> Table:
    table = Table(title=escape(title) + (" (truncated)" if truncated else ""))
    table.add_column("n", justify="right")
    for name in columns:
        table.add_column(escape(name), justify="right")
    depth = min(len(v) for v in columns.values())
    for n in range(depth):
        table.add_row(str(n), *(str(v[n]) for v in columns.values()))
    return table


@app.command()
def hh(
    file: Annotated[str, typer.Argument(help="Document path or packaged fixture name")],
    max_degree: Annotated[Optional[int], typer.Option("--max-degree", "-n", help="Highest degree computed")] = None,
    classes: Annotated[bool, typer.Option("--classes", help="Split by conjugacy classes of the grading")] = False,
    show_coinvariants: Annotated[bool, typer.Option("--coinvariants", help="Add H((C_•)_G) and (HH_n)_G")] = False,
    field: Annotated[Optional[str], typer.Option("--field", "-k", help="Rebind scalars to F_p or Q")] = None,
    profile: Annotated[Optional[str], typer.Option("--profile", "-p", help="Profile name or YAML path")] = None,
    fmt: Annotated[Optional[OutputFormat], typer.Option("--format", "-f", help="table, yaml or json")] = None,
) -> None:
    """Hochschild-Mitchell homology dimensions."""
    with _errors():
        prof = ComputeProfile.load(profile, max_degree=max_degree, output_format=fmt)
        doc = _load(file, field)
        c, dt = doc.category, prof.dense_threshold
        with console.status("Computing homology..."):
            cx = bar_complex(c, prof.max_degree, max_basis_size=prof.max_basis_size, truncate=True)
            result = homology(cx, dt)
            columns = {"dim C_n": result.chain_dimensions[: len(result.dimensions)], "dim HH_n": result.dimensions}
            if classes:
                if doc.grading is None:
                    raise ValueError("Document has no grading; build one with `hmcat skew` or `hmcat quotient`")
                graded = bar_complex(c, prof.max_degree, grading=doc.grading, max_basis_size=prof.max_basis_size, truncate=True)
                per_class = class_homology(class_decomposition(graded, doc.grading), doc.grading, dt)
                result.class_dimensions.update({k: r.dimensions for k, r in per_class.items()})
                columns.update({f"HH^{k}_n": r.dimensions for k, r in per_class.items()})
            extra: dict[str, tuple[int, ...]] = {}
            if show_coinvariants:
                based = attach_g_action(cx, _require_action(doc))
                extra["H_n((C_•)_G)"] = homology(coinvariant_complex(based, dt), dt).dimensions
                extra["(HH_n)_G"] = tuple(
                    coinvariants(homology_representation(based, n, dt), dt).dimension for n in range(based.max_degree + 1)
                )
                columns.update(extra)

    if prof.output_format is OutputFormat.TABLE:
        console.print(_dimension_table(f"HH_*({doc.name or file}) over {c.field.name}", columns, result.truncated))
    else:
        data = result.to_dict()
        data.update({k: list(v) for k, v in extra.items()})
        _emit(data, prof.output_format)


@app.command()
def hhcoh(
    file: Annotated[str, typer.Argument(help="Document path or packaged fixture name")],
    max_degree: Annotated[Optional[int], typer.Option("--max-degree", "-n", help="Highest degree computed")] = None,
    classes: Annotated[bool, typer.Option("--classes", help="Split by conjugacy classes of the grading")] = False,
    show_invariants: Annotated[bool, typer.Option("--invariants", help="Add H(C^•^G) and (HH^n)^G")] = False,
    cup_files: Annotated[
        Optional[list[Path]], typer.Option("--cup", help="Two cochain files ψ, φ (give --cup twice); prints ψ⌣φ")
    ] = None,
    field: Annotated[Optional[str], typer.Option("--field", "-k", help="Rebind scalars to F_p or Q")] = None,
    profile: Annotated[Optional[str], typer.Option("--profile", "-p", help="Profile name or YAML path")] = None,
    fmt: Annotated[Optional[OutputFormat], typer.Option("--format", "-f", help="table, yaml or json")] = None,
) -> None:
    """Hochschild-Mitchell cohomology dimensions, or the cup product of two cochains."""
    with _errors():
        prof = ComputeProfile.load(profile, max_degree=max_degree, output_format=fmt)
        doc = _load(file, field)
        c, dt = doc.category, prof.dense_threshold

        if cup_files:
            if len(cup_files) != 2:
                raise ValueError("--cup takes exactly two cochain files")
            (m, psi), (n, phi) = (load_cochain(path, c) for path in cup_files)
            cx = cochain_complex(c, max(m + n, 1), sign=prof.coboundary_sign, max_basis_size=prof.max_basis_size)
            vectors = []
            for d, entries in ((m, psi), (n, phi)):
                missing = [key for key in entries if key not in cx.indices[d]]
                if missing:
                    raise ValueError(f"Cochain entry {missing[0]} is not a composable path of degree {d}")
                vectors.append({cx.indices[d][key]: v for key, v in entries.items()})
            product = cup(cx, m, vectors[0], n, vectors[1])
            keys = cx.keys[m + n]
            _emit(cochain_to_dict(c, m + n, {keys[i]: v for i, v in product.items()}), OutputFormat.YAML)
            return

        with console.status("Computing cohomology..."):
            cx = cochain_complex(
                c, prof.max_degree, sign=prof.coboundary_sign, max_basis_size=prof.max_basis_size, truncate=True
            )
            result = cohomology(cx, dt)
            columns = {"dim C^n": result.chain_dimensions[: len(result.dimensions)], "dim HH^n": result.dimensions}
            if classes:
                if doc.grading is None:
                    raise ValueError("Document has no grading; build one with `hmcat skew` or `hmcat quotient`")
                graded = cochain_complex(
                    c,
                    prof.max_degree,
                    sign=prof.coboundary_sign,
                    grading=doc.grading,
                    max_basis_size=prof.max_basis_size,
                    truncate=True,
                )
                per_class = class_cohomology(class_decomposition_cochains(graded, doc.grading), doc.grading, dt)
                result.class_dimensions.update({k: r.dimensions for k, r in per_class.items()})
                columns.update({f"HH^n_{k}": r.dimensions for k, r in per_class.items()})
            extra: dict[str, tuple[int, ...]] = {}
            if show_invariants:
                based = attach_g_action_cochains(cx, _require_action(doc))
                extra["H^n(C^•^G)"] = cohomology(invariant_complex(based, dt), dt).dimensions
                extra["(HH^n)^G"] = tuple(
                    invariants(cohomology_representation(based, n, dt), dt).dimension for n in range(based.max_degree + 1)
                )
                columns.update(extra)

    if prof.output_format is OutputFormat.TABLE:
        console.print(_dimension_table(f"HH^*({doc.name or file}) over {c.field.name}", columns, result.truncated))
    else:
        data = result.to_dict()
        data.update({k: list(v) for k, v in extra.items()})
        _emit(data, prof.output_format)


# Verification


def _requests(
    theorem: str,
    file: str | None,
    registry: CheckRegistry,
    prof: ComputeProfile,
    field: Field | None,
    count: int | None,
) -> list[CheckRequest]:
    requests: list[CheckRequest] = []

    def add(name: str, fixture: str, doc: Document | None) -> None:
        requests.append(CheckRequest(len(requests), name, fixture, doc))

    if theorem == "random":
        for doc in random_documents(prof.seed, count or prof.random_instances, field or prof.base_field):
            for name in RANDOM_THEOREMS:
                add(name, doc.name, doc)
        return requests

    if theorem == "all":
        names = registry.ids()
    elif theorem in registry:
        names = [theorem]
    else:
        raise ValueError(f"Unknown theorem: {theorem}. Available: all, random, {', '.join(registry.ids())}")

    loaded: dict[str, Document] = {}

    def document(name: str) -> Document:
        if name not in loaded:
            loaded[name] = load_fixture(name, field)
        return loaded[name]

    for name in names:
        check = registry.get(name)
        if not check.needs_document:
            add(name, "k", None)
        elif file:
            doc = document(file)
            add(name, doc.name or Path(file).stem, doc)
        else:
            for fixture in check.default_fixtures:
                add(name, fixture, document(fixture))
    return requests


def _report_table(reports: list[TheoremReport]) -> Table:
    table = Table(title="Theorem checks")
    table.add_column("theorem")
    table.add_column("fixture")
    table.add_column("field")
    table.add_column("rows", justify="right")
    table.add_column("verdict")
    for report in reports:
        statuses = [row.status(report.hypotheses) for row in report.rows]
        held = sum(1 for s in statuses if s is RowStatus.HOLDS)
        verdict = report.verdict
        note = " (truncated)" if report.truncated else ""
        table.add_row(
            report.theorem,
            escape(report.fixture),
            report.field,
            f"{held}/{len(statuses)}",
            f"[{VERDICT_STYLES[verdict]}]{verdict.value}[/{VERDICT_STYLES[verdict]}]{note}",
        )
    return table


def _print_details(reports: list[TheoremReport]) -> None:
    for report in reports:
        if report.verdict is Verdict.VERIFIED:
            continue
        console.print(f"\n[bold]{report.theorem} on {escape(report.fixture)}[/bold]: {report.verdict.value}")
        for note in report.routing:
            console.print(f"  [dim]{escape(note)}[/dim]")
        if report.error:
            console.print(f"  [red]{escape(report.error)}[/red]")
        unmet = report.unmet()
        if unmet:
            console.print(f"  hypotheses not met: {', '.join(h.value for h in unmet)}")
        for w in report.witnesses():
            console.print(f"  [red]{escape(json.dumps(w, ensure_ascii=False))}[/red]")


@app.command()
def verify(
    theorem: Annotated[str, typer.Argument(help="Theorem id, 'all' or 'random'")],
    file: Annotated[Optional[str], typer.Argument(help="Document path or fixture name (default: packaged fixtures)")] = None,
    max_degree: Annotated[Optional[int], typer.Option("--max-degree", "-n", help="Highest degree compared")] = None,
    field: Annotated[Optional[str], typer.Option("--field", "-k", help="Rebind scalars to F_p or Q")] = None,
    seed: Annotated[Optional[int], typer.Option("--seed", help="Seed for random instances")] = None,
    count: Annotated[Optional[int], typer.Option("--count", help="Number of random instances")] = None,
    parallel: Annotated[Optional[int], typer.Option("--parallel", help="Concurrent checks")] = None,
    transversal: Annotated[
        Optional[TransversalMode], typer.Option("--transversal-mode", help="lowest-index or preferred")
    ] = None,
    profile: Annotated[Optional[str], typer.Option("--profile", "-p", help="Profile name or YAML path")] = None,
    output: Annotated[Optional[str], typer.Option("--output", "-o", help="Write a run directory under this path")] = None,
    fmt: Annotated[Optional[OutputFormat], typer.Option("--format", "-f", help="table, yaml or json")] = None,
) -> None:
    """Check theorems on a document, on the packaged fixtures, or on random instances.

    Exit code 1 when any check is FAILED; verified and hypothesis-not-met exit 0.

    Examples:
        hmcat verify skew-homology swap
        hmcat verify galois swap --max-degree 3
        hmcat verify skew-homology sign --field 2
        hmcat verify all
        hmcat verify random --seed 7 --count 100
    """
    with _errors():
        prof = ComputeProfile.load(
            profile,
            max_degree=max_degree,
            field=field,
            seed=seed,
            parallel=parallel,
            transversal=transversal,
            output_format=fmt,
        )
        registry = default_registry()
        requests = _requests(theorem, file, registry, prof, _field(field), count)

    run_dir = None
    if output:
        run_dir = create_run_dir(output)
        save_run_config(prof.to_dict() | {"theorem": theorem, "file": file}, run_dir)
        console.print(f"Results: {run_dir}")

    runner = VerifyRunner(registry, prof)
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TextColumn("({task.completed}/{task.total})"),
        console=console,
        transient=True,
    ) as progress:
        task_id = progress.add_task("Verifying...", total=len(requests))

        def update_progress(completed: int, total: int) -> None:
            progress.update(task_id, completed=completed)

        reports, metrics = asyncio.run(runner.run_checks(requests, run_dir, update_progress))

    if run_dir is not None:
        (run_dir / "report.md").write_text(render_markdown(reports, metrics, prof), encoding="utf-8")

    if prof.output_format is OutputFormat.TABLE:
        console.print(_report_table(reports))
        _print_details(reports)
        console.print()
        console.print(format_summary(metrics))
    else:
        _emit([r.to_dict() for r in reports], prof.output_format)

    if not metrics.ok:
        raise typer.Exit(1)


# Listings


@app.command()
def fixtures() -> None:
    """List the packaged fixtures."""
    table = Table(title="Fixtures")
    table.add_column("name")
    table.add_column("description")
    for name in list_fixtures():
        table.add_row(name, escape(fixture_description(name)))
    console.print(table)


@app.command()
def profiles() -> None:
    """List available compute profiles."""
    for name in list_profiles():
        console.print(name)


if __name__ == "__main__":
    app()
