"""
Command-line interface for the `overalg` package.

Defines commands available via `python -m overalg` or `overalg` if installed as a script.

See Also
--------
typer.Typer
    Library for building CLI applications: https://typer.tiangolo.com/

Functions
---------
cli_info
    Display version and platform diagnostics.
cli_verify
    Run verification suites and report their residuals.
cli_density
    Tabulate both forms of the Plancherel density as CSV.
main_callback
    Root command for the package command-line interface.
"""
import csv
import logging
import sys
from pathlib import Path
from typing import Optional

import numpy as np
import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from . import info, __version__
from overalg.core.errors.handling import UnknownParameterError
from overalg.core.errors.validation import ValidationError
from overalg.handling.run_config import RunConfig, build_run_config
from overalg.spectral.plancherel import PlancherelWeight
from overalg.verification.catalog import Suite
from overalg.verification.report import Report, SuiteReport, write_report
from overalg.verification.suites import run_suites

app = typer.Typer(add_completion=False, no_args_is_help=True)
console = Console()

DENSITY_S_RANGE = (0.0, 50.0)
DENSITY_COLUMNS = ("s", "weight_left_form", "weight_right_form", "abs_diff")


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def _render(suites: list[SuiteReport], tolerance: float) -> Table:
    table = Table(title=f"Verification (tolerance {tolerance:g})")
    table.add_column("suite")
    table.add_column("check")
    table.add_column("points", justify="right")
    table.add_column("max residual", justify="right")
    table.add_column("status")
    for suite in suites:
        for record in suite.records:
            status = "[green]pass[/green]" if record.passed else "[red]FAIL[/red]"
            table.add_row(suite.suite, record.pair, str(record.num_points),
                          f"{record.max_residual:.3e}", status)
    return table


@app.command("info")
def cli_info() -> None:
    """Display version and platform diagnostics."""
    typer.echo(info())


@app.command("verify")
def cli_verify(
    suite: Optional[Suite] = typer.Option(None, "--suite", help="Suite to run (default: all)."),
    alpha: Optional[float] = typer.Option(None, "--alpha", help="Weight (> 1)."),
    degree: Optional[int] = typer.Option(None, "--degree", help="Degree of the random inputs."),
    num_points: Optional[int] = typer.Option(None, "--num-points", help="Sample points per check."),
    pole_margin: Optional[float] = typer.Option(None, "--pole-margin",
                                                help="Exclusion radius around poles."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed."),
    tolerance: Optional[float] = typer.Option(None, "--tolerance", help="Largest accepted residual."),
    s_max: Optional[str] = typer.Option(None, "--s-max",
                                        help="Spectral truncation, or 'auto'."),
    output: Optional[Path] = typer.Option(None, "--output", help="Path of the JSON report."),
    config: Optional[Path] = typer.Option(None, "--config", help="YAML run configuration."),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress."),
) -> None:
    """Run verification suites and report their residuals.

    Exits with status 0 if every residual is within tolerance, 1 otherwise and 2 on an invalid
    configuration.
    """
    _configure_logging(verbose)
    overrides = {
        "suite": suite.value if suite is not None else None,
        "alpha": alpha,
        "degree": degree,
        "num_points": num_points,
        "pole_margin": pole_margin,
        "seed": seed,
        "tolerance": tolerance,
        "s_max": _parse_s_max(s_max),
        "output": str(output) if output is not None else None,
    }
    run_config = _resolve_config(overrides, config)
    suites = run_suites([run_config.suite], run_config)
    report = Report.from_suites(run_config.to_dict(), suites)
    console.print(_render(suites, run_config.tolerance))
    if run_config.output is not None:
        write_report(report, run_config.output)
    if not report.passed:
        raise typer.Exit(code=1)


def _resolve_config(overrides: dict, config: Optional[Path]) -> RunConfig:
    try:
        return build_run_config(overrides, config)
    except (ValidationError, UnknownParameterError) as exc:
        raise typer.BadParameter(str(exc)) from exc


def _parse_s_max(value: Optional[str]) -> float | str | None:
    if value is None or value == "auto":
        return value
    try:
        return float(value)
    except ValueError:
        return value  # rejected by validation


@app.command("density")
def cli_density(
    alpha: Optional[float] = typer.Option(None, "--alpha", help="Weight (> 1, default 2)."),
    start: float = typer.Option(0.0, "--start", help="First spectral value."),
    stop: float = typer.Option(10.0, "--stop", help="Last spectral value."),
    num: int = typer.Option(101, "--num", help="Number of grid points."),
    output: Optional[Path] = typer.Option(None, "--output", help="CSV file (default: stdout)."),
    config: Optional[Path] = typer.Option(None, "--config", help="YAML run configuration."),
) -> None:
    """Tabulate both forms of the Plancherel density and their difference as CSV.

    The weight is resolved like that of `verify`, so `--alpha` overrides the configuration file.
    """
    lo, hi = DENSITY_S_RANGE
    run_config = _resolve_config({"alpha": alpha}, config)
    rho = PlancherelWeight(run_config.alpha)
    if num < 0:
        raise typer.BadParameter("must be >= 0", param_hint="--num")
    if not (lo <= start <= hi and lo <= stop <= hi):
        raise typer.BadParameter(f"grid must lie within [{lo:g}, {hi:g}]",
                                 param_hint="--start/--stop")

    grid = np.linspace(start, stop, num)
    rows = zip(grid, rho(grid), rho.product_form(grid)) if num else ()

    stream = open(output, "w", newline="", encoding="utf-8") if output else sys.stdout
    try:
        writer = csv.writer(stream)
        writer.writerow(DENSITY_COLUMNS)
        for s, left, right in rows:
            writer.writerow([repr(float(v)) for v in (s, left, right, abs(left - right))])
    finally:
        if output:
            stream.close()


@app.callback(invoke_without_command=True)
def main_callback(
    version: bool = typer.Option(
        False, "--version", "-V", help="Show the package version and exit."
    )
) -> None:
    """Root command for the package command-line interface.

    Parameters
    ----------
    version : bool
        Print the version string and exit.
    """
    if version:
        typer.echo(__version__)
        raise typer.Exit()
