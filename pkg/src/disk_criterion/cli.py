"""Command-line interface for disk-criterion."""

from pathlib import Path
from typing import NoReturn

import typer
from rich.console import Console
from rich.table import Table

from . import __version__
from .config import Config, load_config
from .crosscheck import enumerate_crosscheck
from .cubical import CubicalSet
from .errors import DiskCriterionError
from .pipeline import PipelineResult, check_shape, oracle_shape, parameterize_shape
from .render import emit_svg, write_svg
from .report import emit_report, write_report
from .shapefile import read_shape
from .types import CriterionReport, OracleReport
from .utils.logger import logger, setup_logger

app = typer.Typer(
    name="disk-criterion",
    help="Decide whether a planar cubical set is a closed disk and parameterize its boundary",
    add_completion=False,
)
console = Console()

JSON_OPTION = typer.Option(False, "--json", help="Print the structured report")
TIMING_OPTION = typer.Option(False, "--timing", help="Record stage timings in the report")
VERBOSE_OPTION = typer.Option(False, "--verbose", help="Enable verbose logging")
OUTPUT_OPTION = typer.Option(None, "--output", "-o", help="Also write the report to a file")
CONFIG_OPTION = typer.Option(None, "--config", "-c", help="YAML configuration file")


def version_callback(value: bool) -> None:
    """Show version and exit."""
    if value:
        console.print(f"disk-criterion version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool | None = typer.Option(
        None,
        "--version",
        "-v",
        callback=version_callback,
        is_eager=True,
        help="Show version and exit",
    ),
) -> None:
    """disk-criterion - closed disk recognition for planar cubical sets."""
    pass


def _setup(config_path: Path | None, verbose: bool) -> Config:
    config = load_config(config_path)
    level = "DEBUG" if verbose else config.logging.level
    setup_logger(level=level, log_file=config.logging.file)
    return config


def _fail(e: DiskCriterionError) -> NoReturn:
    console.print(f"[red]Error:[/red] {e}")
    if e.exit_code == 3:
        logger.exception("Internal failure")
    raise typer.Exit(code=e.exit_code)


def _load(shape_path: Path) -> tuple[CubicalSet, str]:
    try:
        return read_shape(shape_path)
    except DiskCriterionError as e:
        _fail(e)


def _show_criterion(report: CriterionReport) -> None:
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Condition")
    table.add_column("Holds")
    table.add_column("Detail")
    table.add_row(
        "1 interior connected",
        "✓" if report.cond1_interior_connected else "✗",
        f"{report.cond1_components} components",
    )
    table.add_row(
        "2 complement connected",
        "✓" if report.cond2_complement_connected else "✗",
        f"{report.cond2_components} components",
    )
    table.add_row(
        "3 accessible from interior",
        "✓" if not report.cond3_failures else "✗",
        ", ".join(e.label for e in report.cond3_failures) or "-",
    )
    table.add_row(
        "4 accessible from complement",
        "✓" if not report.cond4_failures else "✗",
        ", ".join(e.label for e in report.cond4_failures) or "-",
    )
    console.print(table)
    color = "green" if report.verdict.value == "disk" else "yellow"
    console.print(f"Verdict: [{color}]{report.verdict.value}[/{color}]")


def _show_oracle(report: OracleReport) -> None:
    console.print(
        f"Oracle: V={report.vertices} E={report.edges} F={report.faces} "
        f"chi={report.euler_characteristic} "
        f"manifold={'yes' if report.manifold_with_boundary else 'no'} "
        f"-> [cyan]{'disk' if report.is_disk else 'not disk'}[/cyan]"
    )


def _finish(result: PipelineResult, as_json: bool, output: Path | None) -> None:
    if output is not None:
        write_report(result.document, output)
    if as_json:
        typer.echo(emit_report(result.document))
    else:
        doc = result.document
        if doc.criterion is not None:
            _show_criterion(doc.criterion)
        if doc.oracle is not None:
            _show_oracle(doc.oracle)
        if doc.parameterization is not None:
            p = doc.parameterization
            console.print(
                f"Parameterized {len(p.parameters)} boundary elements "
                f"(z1={p.z1}, z2={p.z2}, K1 depth {p.k1_depth}, K2 depth {p.k2_depth})"
            )
    raise typer.Exit(code=result.exit_code)


@app.command()
def check(
    shape_path: Path = typer.Argument(..., help="Path to ShapeFile", exists=True),
    as_json: bool = JSON_OPTION,
    timing: bool = TIMING_OPTION,
    output: Path | None = OUTPUT_OPTION,
    config_path: Path | None = CONFIG_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Evaluate the four-condition criterion and the oracle."""
    _setup(config_path, verbose)
    cubical, text = _load(shape_path)
    try:
        result = check_shape(cubical, text, timing)
    except DiskCriterionError as e:
        _fail(e)
    _finish(result, as_json, output)


@app.command()
def param(
    shape_path: Path = typer.Argument(..., help="Path to ShapeFile", exists=True),
    svg: Path | None = typer.Option(None, "--svg", help="Write an SVG rendering here"),
    levels: int | None = typer.Option(
        None, "--levels", "-l", min=0, max=4, help="2x2 refinement levels for the decay check"
    ),
    as_json: bool = JSON_OPTION,
    timing: bool = TIMING_OPTION,
    output: Path | None = OUTPUT_OPTION,
    config_path: Path | None = CONFIG_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Run the constructive boundary parameterization."""
    config = _setup(config_path, verbose)
    if levels is not None:
        config.parameterize.refinement_levels = levels
    cubical, text = _load(shape_path)
    try:
        result = parameterize_shape(cubical, text, config, timing)
        if svg is not None:
            rendered = emit_svg(
                cubical,
                result.split,
                result.circle,
                result.document.criterion,
                config.render,
            )
            write_svg(rendered, svg)
    except DiskCriterionError as e:
        _fail(e)
    _finish(result, as_json, output)


@app.command()
def oracle(
    shape_path: Path = typer.Argument(..., help="Path to ShapeFile", exists=True),
    as_json: bool = JSON_OPTION,
    timing: bool = TIMING_OPTION,
    output: Path | None = OUTPUT_OPTION,
    config_path: Path | None = CONFIG_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Run only the combinatorial oracle."""
    _setup(config_path, verbose)
    cubical, text = _load(shape_path)
    _finish(oracle_shape(cubical, text, timing), as_json, output)


@app.command()
def crosscheck(
    width: int = typer.Option(..., "--width", "-w", help="Grid width"),
    height: int = typer.Option(..., "--height", "-h", help="Grid height"),
    extras: bool = typer.Option(False, "--extras", help="Include the dangling extras suite"),
    jobs: int | None = typer.Option(None, "--jobs", "-j", help="Worker processes"),
    as_json: bool = JSON_OPTION,
    config_path: Path | None = CONFIG_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Compare criterion and oracle on every cell subset of a grid."""
    config = _setup(config_path, verbose)
    try:
        report = enumerate_crosscheck(
            width,
            height,
            include_extras=extras,
            jobs=jobs if jobs is not None else config.crosscheck.workers,
            chunk_size=config.crosscheck.chunk_size,
            max_cells=config.crosscheck.max_cells,
        )
    except DiskCriterionError as e:
        _fail(e)

    if as_json:
        typer.echo(emit_report(report))
    else:
        console.print(
            f"Checked [cyan]{report.shapes:,}[/cyan] shapes, "
            f"{report.disks:,} disks, {len(report.disagreements)} disagreements"
        )
        for d in report.disagreements[:10]:
            console.print(
                f"[red]criterion {d.criterion_verdict.value}, "
                f"oracle {'disk' if d.oracle_is_disk else 'not disk'}[/red]\n{d.shape}"
            )
    raise typer.Exit(code=0 if report.agreed else 1)


if __name__ == "__main__":
    app()
