"""Command-line interface for range-seminorm and wave-decay experiments using Typer.

Every operation is a subcommand that writes CSV files and a ``manifest.txt``
echoing the effective configuration into its output directory.

Commands:
    seminorm   - Range seminorms by the time and frequency methods
    scan       - Bracket sup I_S on an α grid
    wave       - Wave norms on a time grid with the fitted growth law
    green      - Generalized Green kernels against their closed form
    transmute  - Heat flow recovered from the wave flow
    verify     - Run the property suites
    run        - Run the steps of a YAML experiment config
    list       - List operators, steps, suites or built-in configs

Exit codes: 0 pass, 1 usage or config error, 2 numerical guard, 3 property violation.

Interactive mode:
    Run `critlab` with no arguments to enter the interactive shell.
"""

from __future__ import annotations

import os
os.environ["ABSL_LOGGING_LEVEL"] = "ERROR"
import absl.logging
absl.logging.set_verbosity(absl.logging.ERROR)

import atexit
try:
    import readline
except ImportError:
    readline = None  # readline unavailable on Windows
import shlex
import sys
from pathlib import Path
from typing import Any, Optional

import typer
from rich.console import Console
from rich.table import Table

from .io import write_manifest
from .operators import list_operator_families
from .pipeline import (
    ExperimentContext,
    build_experiment,
    builtin_config_path,
    list_available_steps,
    list_experiment_configs,
    list_suites,
    load_experiment_config,
)

__version__ = "0.1.0"

app = typer.Typer(
    help="Range seminorms, heat decay and wave growth for model Schrödinger operators.",
)

list_app = typer.Typer(
    help="List available resources.",
    no_args_is_help=True
)
app.add_typer(list_app, name="list")

console = Console()

# Options shared by the experiment commands.
_CONFIG = typer.Option(None, "--config", "-f", help="YAML config file or built-in config name")
_OP = typer.Option(None, "--op", help="Operator spec: free1d, free:N or hardy:N:lambda")
_DATA = typer.Option(None, "--data", help="Data spec: gaussian(w), bump(c,w), annulus(r0,r1), dipole(r0,r1,w)")
_GRID_M = typer.Option(None, "--grid-m", help="Grid size M")
_GRID_R = typer.Option(None, "--grid-r", help="Domain cutoff R")
_TMAX = typer.Option(None, "--tmax", help="Upper end of the time grid")
_OUT = typer.Option(None, "--out", "-o", help="Output directory")
_SEED = typer.Option(None, "--seed", help="Seed for randomized suites")
_WORKERS = typer.Option(None, "--workers", help="Max parallel workers")
_NO_PROGRESS = typer.Option(False, "--no-progress", help="Hide progress bar")
_VERBOSE = typer.Option(False, "--verbose", "-v", help="Log progress at INFO level")


def _resolve_config_file(config_file: Optional[str]) -> dict[str, Any]:
    """Load a config by path, falling back to the built-in configs by name."""
    if config_file is None:
        return {}
    path = Path(config_file)
    if not path.exists():
        path = builtin_config_path(config_file)
    return load_experiment_config(path)


def _collect_overrides(**flags: Any) -> dict[str, Any]:
    """Keep only the flags that were explicitly set."""
    return {
        key: value for key, value in flags.items()
        if value is not None and not (isinstance(value, (list, tuple)) and not value)
    }


def _execute(
    steps: Optional[list[Any]],
    config_file: Optional[str],
    overrides: dict[str, Any],
    verbose: bool,
    no_progress: bool,
) -> ExperimentContext:
    """Build the experiment, echo its manifest, run it and report failures.

    Usage and configuration errors exit with code 1 before anything runs.
    """
    absl.logging.set_verbosity(absl.logging.INFO if verbose else absl.logging.ERROR)
    if steps is not None:
        overrides = {**overrides, "steps": steps}
    try:
        raw_config = _resolve_config_file(config_file)
        runner, context = build_experiment(raw_config, overrides)
    except Exception as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        raise typer.Exit(code=1)

    manifest = write_manifest(context.output_path("manifest.txt"), context.config.settings())
    context.artifacts["manifest"] = str(manifest)
    context = runner.execute(context, show_progress=not no_progress)

    for error in context.errors:
        console.print(f"[bold red]Error:[/bold red] {error}")
    for trip in context.guard_trips:
        console.print(f"[bold yellow]Numerical guard:[/bold yellow] {trip}")
    for violation in context.violations:
        console.print(f"[bold red]Violation:[/bold red] {violation}")
    return context


def _finish(context: ExperimentContext) -> None:
    """Print the artifact table and exit with the context's code."""
    if context.artifacts:
        table = Table(title="Artifacts")
        table.add_column("Artifact", style="cyan")
        table.add_column("Path", style="white")
        for name, path in context.artifacts.items():
            table.add_row(name, path)
        console.print(table)
    if context.exit_code == 0:
        console.print("[bold green]✓ Done[/bold green]")
    raise typer.Exit(code=context.exit_code)


# =============================================================================
# LIST Commands
# =============================================================================

@list_app.command("operators")
def list_operators():
    """List the operator families and their spec grammar."""
    table = Table(title="Operator Families")
    table.add_column("Prefix", style="cyan")
    table.add_column("Grammar", style="green")
    table.add_column("Description", style="white")
    for prefix, grammar, description in list_operator_families():
        table.add_row(prefix, grammar, description)
    console.print(table)


@list_app.command("steps")
def list_steps():
    """List registered experiment steps."""
    table = Table(title="Experiment Steps")
    table.add_column("Step", style="green")
    for name in list_available_steps():
        table.add_row(name)
    console.print(table)


@list_app.command("suites")
def list_verify_suites():
    """List registered verify suites."""
    table = Table(title="Verify Suites")
    table.add_column("Suite", style="green")
    table.add_column("Checks", style="white")
    for name, description in list_suites():
        table.add_row(name, description)
    console.print(table)


@list_app.command("configs")
def list_configs():
    """List built-in YAML experiment configurations."""
    configs = list_experiment_configs()
    if not configs:
        console.print("[yellow]No built-in experiment configs found.[/yellow]")
        return
    table = Table(title="Built-in Experiment Configs")
    table.add_column("File", style="cyan")
    table.add_column("Description", style="white")
    for filename, description in configs:
        table.add_row(filename, description)
    console.print(table)
    console.print("\n[dim]Usage: critlab run --config <name>[/dim]")


# =============================================================================
# EXPERIMENT Commands
# =============================================================================

@app.command("seminorm")
def seminorm(
    config_file: Optional[str] = _CONFIG,
    op: Optional[str] = _OP,
    data: Optional[str] = _DATA,
    alpha: Optional[list[float]] = typer.Option(None, "--alpha", "-a", help="α value (repeatable)"),
    grid_m: Optional[int] = _GRID_M,
    grid_r: Optional[float] = _GRID_R,
    tmax: Optional[float] = _TMAX,
    out: Optional[Path] = _OUT,
    seed: Optional[int] = _SEED,
    no_progress: bool = _NO_PROGRESS,
    verbose: bool = _VERBOSE,
):
    """Evaluate |||g|||_{R(S^α)} by the time and frequency methods (seminorm.csv).

    \b
    Examples:
        critlab seminorm --op free:3 --data "gaussian(1)" --alpha 0.4
        critlab seminorm --op hardy:3:-0.25 --data "bump(3,1)" -a 0.2 -a 0.4
    """
    overrides = _collect_overrides(
        operator=op, data=data, alphas=alpha, grid_m=grid_m, grid_r=grid_r, t_max=tmax,
        output_dir=out and str(out), seed=seed,
    )
    context = _execute(["seminorm"], config_file, overrides, verbose, no_progress)
    rows = context.results.get("seminorm", [])
    if rows:
        table = Table(title=f"Range seminorms of {context.config.data} for {context.config.operator}")
        for column in ("α", "time", "value", "frequency", "value", "rel diff"):
            table.add_column(column)
        for a, t_verdict, t_value, f_verdict, f_value, rel_diff, _ in rows:
            table.add_row(
                f"{a:g}", t_verdict.value, _short(t_value), f_verdict.value, _short(f_value), _short(rel_diff)
            )
        console.print(table)
    _finish(context)


@app.command("scan")
def scan(
    config_file: Optional[str] = _CONFIG,
    op: Optional[str] = _OP,
    data: Optional[str] = _DATA,
    alpha_lo: Optional[float] = typer.Option(None, "--alpha-lo", help="First α of the scan"),
    alpha_hi: Optional[float] = typer.Option(None, "--alpha-hi", help="Last α of the scan"),
    alpha_step: Optional[float] = typer.Option(None, "--alpha-step", help="α grid spacing"),
    grid_m: Optional[int] = _GRID_M,
    grid_r: Optional[float] = _GRID_R,
    tmax: Optional[float] = _TMAX,
    out: Optional[Path] = _OUT,
    seed: Optional[int] = _SEED,
    workers: Optional[int] = _WORKERS,
    no_progress: bool = _NO_PROGRESS,
    verbose: bool = _VERBOSE,
):
    """Scan α and bracket sup I_S (scan.csv).

    \b
    Examples:
        critlab scan --op free:4 --data "bump(3,1)"
        critlab scan --op hardy:2:0 --data "bump(3,1)" --alpha-hi 1.0
    """
    overrides = _collect_overrides(
        operator=op, data=data, alpha_lo=alpha_lo, alpha_hi=alpha_hi, alpha_step=alpha_step,
        grid_m=grid_m, grid_r=grid_r, t_max=tmax, output_dir=out and str(out), seed=seed, workers=workers,
    )
    context = _execute(["scan"], config_file, overrides, verbose, no_progress)
    estimate = context.results.get("scan")
    if estimate is not None:
        lo, hi = estimate.sup_bracket
        classification = context.results["classification"]
        console.print(f"[bold]sup I_S ∈ [{lo:g}, {hi:g}][/bold]")
        console.print(
            f"{classification.verdict.value}: analytic sup I_S = {classification.analytic_sup_alpha:g} "
            f"({classification.sector} sector)"
        )
        if not estimate.consistent:
            console.print("[yellow]Time-method edge checks disagree with the bracket.[/yellow]")
    _finish(context)


@app.command("wave")
def wave(
    config_file: Optional[str] = _CONFIG,
    op: Optional[str] = _OP,
    data: Optional[str] = _DATA,
    alpha: Optional[float] = typer.Option(None, "--alpha", "-a", help="α for the weighted-sup comparison"),
    grid_m: Optional[int] = _GRID_M,
    grid_r: Optional[float] = _GRID_R,
    tmax: Optional[float] = _TMAX,
    out: Optional[Path] = _OUT,
    seed: Optional[int] = _SEED,
    no_progress: bool = _NO_PROGRESS,
    verbose: bool = _VERBOSE,
):
    """Whole-space ‖W(t)g‖ on a log time grid with the best growth law (wave.csv).

    \b
    Examples:
        critlab wave --op free:3 --data "bump(3,1)"
        critlab wave --op free1d --data "bump(0,2)" --tmax 1000
    """
    overrides = _collect_overrides(
        operator=op, data=data, wave_alpha=alpha, grid_m=grid_m, grid_r=grid_r, wave_t_max=tmax,
        output_dir=out and str(out), seed=seed,
    )
    context = _execute(["wave"], config_file, overrides, verbose, no_progress)
    curve = context.results.get("wave")
    if curve is not None:
        console.print(
            f"[bold]Best model: {curve.model.kind.value}[/bold] "
            f"(parameter {curve.model.parameter:.6g}, residual {curve.model.residual:.3g})"
        )
        if curve.bound is not None:
            status = "[green]holds[/green]" if curve.bound_holds else "[red]violated[/red]"
            console.print(
                f"sup t^(2α-1)‖W(t)g‖ = {curve.weighted_sup:.6g} ≤ {curve.bound:.6g}: {status}"
            )
    _finish(context)


@app.command("green")
def green(
    config_file: Optional[str] = _CONFIG,
    op: Optional[str] = _OP,
    alpha: Optional[list[float]] = typer.Option(None, "--alpha", "-a", help="α value (repeatable)"),
    distance: Optional[float] = typer.Option(None, "--distance", "-d", help="|x - y|"),
    out: Optional[Path] = _OUT,
    no_progress: bool = _NO_PROGRESS,
    verbose: bool = _VERBOSE,
):
    """Generalized Green kernels Φ_{S,α} against the Riesz closed form (green.csv).

    \b
    Examples:
        critlab green --op free:3 --alpha 0.5
        critlab green --op free:2 --alpha 0.5
    """
    overrides = _collect_overrides(
        operator=op, green_alphas=alpha, green_distance=distance, output_dir=out and str(out),
    )
    context = _execute(["green"], config_file, overrides, verbose, no_progress)
    results = context.results.get("green", [])
    if results:
        table = Table(title=f"Green kernels of {context.config.operator}")
        for column in ("α", "distance", "verdict", "value", "closed form", "rel error"):
            table.add_column(column)
        for r in results:
            table.add_row(
                f"{r.alpha:g}", f"{r.distance:g}", r.verdict.value,
                _short(r.value), _short(r.closed_form), _short(r.rel_error),
            )
        console.print(table)
    _finish(context)


@app.command("transmute")
def transmute(
    config_file: Optional[str] = _CONFIG,
    op: Optional[str] = _OP,
    data: Optional[str] = _DATA,
    times: Optional[list[float]] = typer.Option(None, "--t", "-t", help="Heat time (repeatable)"),
    grid_m: Optional[int] = _GRID_M,
    grid_r: Optional[float] = _GRID_R,
    out: Optional[Path] = _OUT,
    no_progress: bool = _NO_PROGRESS,
    verbose: bool = _VERBOSE,
):
    """Compare e^{-tS}g with the transmuted wave flow (transmute.csv).

    \b
    Examples:
        critlab transmute --op hardy:3:1 --data "bump(3,1)" -t 0.5 -t 2
    """
    overrides = _collect_overrides(
        operator=op, data=data, transmute_times=times, grid_m=grid_m, grid_r=grid_r,
        output_dir=out and str(out),
    )
    context = _execute(["transmute"], config_file, overrides, verbose, no_progress)
    for t, rel_error in context.results.get("transmute", []):
        console.print(f"t = {t:g}: relative error {rel_error:.3e}")
    _finish(context)


@app.command("verify")
def verify(
    config_file: Optional[str] = _CONFIG,
    suite: Optional[list[str]] = typer.Option(None, "--suite", "-s", help="Suite to run (repeatable, default all)"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Random functions per kind"),
    grid_m: Optional[int] = _GRID_M,
    grid_r: Optional[float] = _GRID_R,
    out: Optional[Path] = _OUT,
    seed: Optional[int] = _SEED,
    workers: Optional[int] = _WORKERS,
    no_progress: bool = _NO_PROGRESS,
    verbose: bool = _VERBOSE,
):
    """Run the property suites into verify_report.csv.

    \b
    Examples:
        critlab verify
        critlab verify --suite transforms --suite green-kernels --samples 10
        critlab verify --grid-m 16
    """
    overrides = _collect_overrides(
        suites=suite, samples=samples, grid_m=grid_m, grid_r=grid_r, output_dir=out and str(out),
        seed=seed, workers=workers,
    )
    context = _execute(["verify"], config_file, overrides, verbose, no_progress)
    reports = context.results.get("verify", [])
    if reports:
        table = Table(title="Verify Suites")
        table.add_column("Suite", style="cyan")
        table.add_column("Checks")
        table.add_column("Failed")
        table.add_column("Status")
        for report in reports:
            if report.guard_trips:
                status = "[yellow]guard[/yellow]"
            else:
                status = "[green]pass[/green]" if report.passed else "[red]fail[/red]"
            table.add_row(report.suite, str(len(report.checks)), str(len(report.failures)), status)
        console.print(table)
    _finish(context)


# =============================================================================
# RUN Command
# =============================================================================

@app.command("run")
def run(
    config_file: str = typer.Option(..., "--config", "-f", help="YAML config file or built-in config name"),
    op: Optional[str] = _OP,
    data: Optional[str] = _DATA,
    grid_m: Optional[int] = _GRID_M,
    grid_r: Optional[float] = _GRID_R,
    tmax: Optional[float] = _TMAX,
    out: Optional[Path] = _OUT,
    seed: Optional[int] = _SEED,
    workers: Optional[int] = _WORKERS,
    no_progress: bool = _NO_PROGRESS,
    verbose: bool = _VERBOSE,
):
    """Run the ``steps:`` list of a YAML experiment config.

    \b
    Examples:
        critlab run --config default
        critlab run --config hardy-critical --out outputs/hardy
        critlab run --config my_experiment.yaml --grid-m 1024
    """
    console.print(f"[bold blue]Experiment launching (config: {config_file})[/bold blue]")
    overrides = _collect_overrides(
        operator=op, data=data, grid_m=grid_m, grid_r=grid_r, t_max=tmax,
        output_dir=out and str(out), seed=seed, workers=workers,
    )
    context = _execute(None, config_file, overrides, verbose, no_progress)
    _finish(context)


def _short(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.6g}"


@app.callback(invoke_without_command=True)
def main(ctx: typer.Context):
    """Range seminorms, heat decay and wave growth for model Schrödinger operators."""
    if ctx.invoked_subcommand is None:
        raise typer.Exit()


# =============================================================================
# Interactive Shell
# =============================================================================

CRITLAB_BANNER = r"""
    ╔═══════════════════════════════════════════════╗
    ║                                               ║
    ║      ∂ₜu + Su = 0        ∂ₜ²w + Sw = 0        ║
    ║                                               ║
    ║        c r i t l a b   ·   R(S^α) lab         ║
    ║                                               ║
    ╚═══════════════════════════════════════════════╝
"""


_HISTORY_FILE = Path.home() / ".critlab_history"
_HISTORY_LENGTH = 1000

# Top-level commands and subcommands for tab completion
_COMPLETIONS = [
    "seminorm", "scan", "wave", "green", "transmute", "verify", "run",
    "list", "operators", "steps", "suites", "configs",
    "help", "exit", "quit",
    "--config", "--op", "--data", "--alpha", "--alpha-lo", "--alpha-hi", "--alpha-step",
    "--grid-m", "--grid-r", "--tmax", "--out", "--seed", "--workers",
    "--distance", "--t", "--suite", "--samples",
    "--no-progress", "--verbose",
    "-f", "-a", "-o", "-d", "-t", "-s", "-v",
]


def _setup_readline():
    """Configure readline for history, line editing, and tab completion."""
    if readline is None:
        return
    try:
        readline.read_history_file(_HISTORY_FILE)
    except FileNotFoundError:
        pass
    readline.set_history_length(_HISTORY_LENGTH)
    atexit.register(readline.write_history_file, str(_HISTORY_FILE))

    def completer(text: str, state: int) -> str | None:
        buf = readline.get_line_buffer().lstrip()
        # If cursor is on the first token, complete command names only
        if " " not in buf:
            options = [c for c in _COMPLETIONS if c.startswith(text) and not c.startswith("-")]
        else:
            options = [c for c in _COMPLETIONS if c.startswith(text)]
        return options[state] if state < len(options) else None

    readline.set_completer(completer)
    readline.set_completer_delims(" \t")
    # macOS ships libedit instead of GNU readline; bind syntax differs
    if "libedit" in (readline.__doc__ or ""):
        readline.parse_and_bind("bind ^I rl_complete")
    else:
        readline.parse_and_bind("tab: complete")


def interactive_shell():
    """Run the interactive critlab shell."""
    _setup_readline()

    console.print(CRITLAB_BANNER, style="bold cyan")
    console.print(f"  critlab v{__version__}", style="bold white")
    console.print("  Type [bold]help[/bold] for commands, [bold]exit[/bold] to quit.\n")

    while True:
        try:
            line = input("critlab> ").strip()
        except (EOFError, KeyboardInterrupt):
            console.print("\nGoodbye!", style="bold cyan")
            break

        if not line:
            continue

        if line.lower() in ("exit", "quit"):
            console.print("Goodbye!", style="bold cyan")
            break

        if line.lower() == "help":
            line = "--help"

        try:
            args = shlex.split(line)
        except ValueError as e:
            console.print(f"[red]Parse error:[/red] {e}")
            continue

        try:
            app(args, standalone_mode=False)
        except SystemExit:
            # Typer/Click raises SystemExit on --help and errors; absorb it
            pass
        except Exception as e:
            console.print(f"[red]Error:[/red] {e}")


def main_entry():
    """Console-scripts entry point.

    - With arguments: one-shot mode (delegates to Typer app).
    - Without arguments: launches the interactive shell.
    """
    if len(sys.argv) > 1:
        app()
    else:
        interactive_shell()


if __name__ == "__main__":
    main_entry()
