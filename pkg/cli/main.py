"""
tkkforge command line.

    tkkforge <subcommand> [input-file|catalog-name] [--field rational|p:<prime>] [--seed N] [--report PATH]

Exit status: 0 when every verdict passes, 1 when a verification fails,
2 on input errors.
"""
from pathlib import Path
from typing import Annotated, Callable, Optional

import typer

from cli import commands
from cli.commands import Claim, Construction, HomologyKind
from cli.reports import Report
from config import config
from errors import FieldMismatchError, KindMismatch, ParseError, TkkError, UnknownName
from exactla import Field
from observability.logging_config import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

INPUT_ERRORS = (ParseError, UnknownName, KindMismatch, FieldMismatchError)

app = typer.Typer(name="tkkforge", help="TKK and uTKK constructions with machine-checked certificates.", no_args_is_help=True)
catalog_app = typer.Typer(help="The built-in example catalog.", no_args_is_help=True)
app.add_typer(catalog_app, name="catalog")

Target = Annotated[str, typer.Argument(help="structure file or catalog name")]
FieldOption = Annotated[Optional[str], typer.Option("--field", help="rational or p:<prime>")]
SeedOption = Annotated[Optional[int], typer.Option("--seed", help="seed for the spot checks")]
ReportOption = Annotated[Optional[Path], typer.Option("--report", help="write the JSON report here")]
TimingOption = Annotated[bool, typer.Option("--timing", help="include timings in the report")]


@app.callback()
def main(
    log_level: Annotated[Optional[str], typer.Option("--log-level", help="DEBUG, INFO, WARNING, ...")] = None,
    json_logs: Annotated[bool, typer.Option("--json-logs", help="JSON log lines on stderr")] = False,
) -> None:
    setup_logging(level=log_level, json_format=json_logs or None)


def _field(descriptor: Optional[str]) -> Optional[Field]:
    if descriptor is None:
        return None
    try:
        return Field.from_descriptor(descriptor)
    except ValueError as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(EXIT_INPUT)


def _execute(target: str, field: Optional[str], seed: Optional[int], report_path: Optional[Path], run: Callable) -> None:
    """Load the input, run the command and map the outcome to an exit status."""
    seed = config.DEFAULT_SEED if seed is None else seed
    f = _field(field)
    try:
        report: Report = run(commands.load_input(target, f), seed)
    except INPUT_ERRORS as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(EXIT_INPUT)
    except TkkError as exc:
        logger.warning(f"{type(exc).__name__}: {exc}")
        typer.echo(f"failed: {exc}", err=True)
        raise typer.Exit(EXIT_FAILED)
    typer.echo(report.render())
    if report_path is not None:
        report.write(report_path)
    raise typer.Exit(EXIT_OK if report.passed else EXIT_FAILED)


@app.command()
def check(target: Target, field: FieldOption = None, seed: SeedOption = None, report: ReportOption = None, timing: TimingOption = False) -> None:
    """Certify the axioms of a structure."""
    _execute(target, field, seed, report, lambda inp, s: commands.run_check(inp, s, timing))


@app.command()
def build(
    construction: Annotated[Construction, typer.Argument(help="tkk or utkk")],
    target: Target,
    output: Annotated[Optional[Path], typer.Option("--output", help="write the graded Lie algebra here")] = None,
    field: FieldOption = None,
    seed: SeedOption = None,
    report: ReportOption = None,
    timing: TimingOption = False,
) -> None:
    """Build TKK(P) or uTKK(P) of a Jordan structure."""
    _execute(target, field, seed, report, lambda inp, s: commands.run_build(inp, construction, s, output, timing))


@app.command()
def homology(
    kind: Annotated[HomologyKind, typer.Argument(help="h2gr, h2 or h2coh")],
    target: Target,
    m: Annotated[int, typer.Option("--m", min=0, help="coefficient dimension for h2coh")] = 1,
    field: FieldOption = None,
    seed: SeedOption = None,
    report: ReportOption = None,
    timing: TimingOption = False,
) -> None:
    """Second homology of a graded Lie algebra."""
    _execute(target, field, seed, report, lambda inp, s: commands.run_homology(inp, kind, s, m, timing))


@app.command()
def verify(
    claim: Annotated[Claim, typer.Argument(help="which equivalence or identity to verify")],
    target: Target,
    field: FieldOption = None,
    seed: SeedOption = None,
    report: ReportOption = None,
    timing: TimingOption = False,
) -> None:
    """Run a verification pipeline on one instance."""
    _execute(target, field, seed, report, lambda inp, s: commands.run_verify(inp, claim, s, timing))


@app.command("extend-hom")
def extend_hom(target: Target, field: FieldOption = None, seed: SeedOption = None, report: ReportOption = None, timing: TimingOption = False) -> None:
    """Extend identity homomorphisms out of uTKK."""
    _execute(target, field, seed, report, lambda inp, s: commands.run_extend_hom(inp, s, timing))


@app.command("split-extension")
def split_extension(target: Target, field: FieldOption = None, seed: SeedOption = None, report: ReportOption = None, timing: TimingOption = False) -> None:
    """Split central 0-extensions of a 0-perfect graded Lie algebra."""
    _execute(target, field, seed, report, lambda inp, s: commands.run_split_extension(inp, s, timing))


@catalog_app.command("list")
def catalog_list() -> None:
    """List catalog names."""
    for name in commands.run_catalog_list():
        typer.echo(name)


@catalog_app.command("emit")
def catalog_emit(
    name: Annotated[str, typer.Argument(help="catalog name")],
    field: FieldOption = None,
    output: Annotated[Optional[Path], typer.Option("--output", help="write the file here")] = None,
) -> None:
    """Print a catalog entry as a structure file."""
    try:
        text = commands.run_catalog_emit(name, _field(field))
    except UnknownName as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(EXIT_INPUT)
    if output is None:
        typer.echo(text)
    else:
        output.write_text(text + "\n", encoding="utf-8")


if __name__ == "__main__":
    app()
