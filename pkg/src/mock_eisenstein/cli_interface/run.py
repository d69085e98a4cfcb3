"""
Command-line entry point: q-expansions, Hurwitz tables, the completion verifier and check suites.
"""

import csv
import io
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import NoReturn

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from mock_eisenstein.cli_interface.job_config import ChecksJob, EisensteinJob, HurwitzJob, VerifyJob
from mock_eisenstein.cli_interface.suites import CheckSuiteRunner, get_config_for_suite
from mock_eisenstein.completion.verifier import verify_completion
from mock_eisenstein.config import RuntimeSettings
from mock_eisenstein.core.certificate import CongruenceCertificate
from mock_eisenstein.core.errors import DomainError, MockEisensteinError
from mock_eisenstein.core.parallel import parallel_map
from mock_eisenstein.eisenstein.cohen import cohen_series
from mock_eisenstein.eisenstein.hurwitz import hurwitz_forms, hurwitz_L
from mock_eisenstein.monitors.logging_monitor import LoggingMonitor
from mock_eisenstein.numtheory.bernoulli import configure_bernoulli_cache
from mock_eisenstein.qseries.expansion import format_rational
from mock_eisenstein.storage.bernoulli_cache_nosql import NoSQLBernoulliCache

logger = logging.getLogger(__name__)

EXIT_MISMATCH = 1
EXIT_USAGE = 2

app = typer.Typer(
    name="mock-eisenstein",
    help="Exact q-expansions of half-integral weight Eisenstein series and their p-adic congruences",
    add_completion=False,
)
console = Console()
err_console = Console(stderr=True)


def _settings(ctx: typer.Context) -> RuntimeSettings:
    return ctx.obj


def _fail_usage(error: Exception) -> NoReturn:
    err_console.print(f"[bold red]Error:[/bold red] {error}")
    raise typer.Exit(EXIT_USAGE)


def _fail_mismatch(error: Exception) -> NoReturn:
    err_console.print(f"[bold red]Error:[/bold red] {error}")
    raise typer.Exit(EXIT_MISMATCH)


def _emit(text: str, out: Path | None) -> None:
    """Write an artifact to the given path, or to stdout."""
    if out is None:
        typer.echo(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text if text.endswith("\n") else text + "\n")
    err_console.print(f"[green]Wrote[/green] [cyan]{out}[/cyan]")


def _certificate_table(certificate: CongruenceCertificate) -> Table:
    table = Table(title=certificate.summary_line(), show_header=True, header_style="bold magenta")
    table.add_column("m", justify="right", style="cyan")
    table.add_column("lhs mod p^l", justify="right")
    table.add_column("rhs mod p^l", justify="right")
    table.add_column("corrected", justify="center")
    corrected = set(certificate.corrected_exponents)
    differing = set(certificate.diff_exponents())
    for (e, lhs), (_, rhs) in zip(certificate.lhs_table or [], certificate.rhs_table or []):
        style = "bold red" if e in differing else None
        table.add_row(str(e), str(lhs), str(rhs), "yes" if e in corrected else "", style=style)
    return table


@app.command()
def eisenstein(
    ctx: typer.Context,
    weight: str = typer.Option(..., "--weight", "-k", help="Weight as t/2, e.g. 7/2"),
    precision: int = typer.Option(..., "--precision", "-N", help="Highest exponent"),
    output_format: str = typer.Option("json", "--format", help="json, csv or table"),
    out: Path | None = typer.Option(None, "--out", help="Write the artifact to this file"),
):
    """Cohen Eisenstein series E_k through q^N."""
    try:
        job = EisensteinJob(weight=weight, precision=precision, format=output_format, out=out)
    except (ValidationError, DomainError) as e:
        _fail_usage(e)

    series = cohen_series(job.half_int_weight, job.precision, workers=_settings(ctx).workers)
    if job.format == "json":
        _emit(series.to_json(), job.out)
    elif job.format == "csv":
        _emit(series.to_csv(), job.out)
    else:
        table = Table(title=f"E_{job.half_int_weight} through q^{job.precision}", header_style="bold magenta")
        table.add_column("n", justify="right", style="cyan")
        table.add_column("c_n", justify="right")
        for n, value in series.items():
            table.add_row(str(n), format_rational(value))
        console.print(table)


def _hurwitz_row(n: int) -> tuple[int, Fraction, Fraction]:
    return n, hurwitz_forms(n).value, hurwitz_L(n).value


@app.command()
def hurwitz(
    ctx: typer.Context,
    precision: int = typer.Option(..., "--precision", "-N", help="Highest n"),
    output_format: str = typer.Option("table", "--format", help="table, json or csv"),
    out: Path | None = typer.Option(None, "--out", help="Write the artifact to this file"),
):
    """Hurwitz class numbers H(0..N), checked against both oracles."""
    try:
        job = HurwitzJob(precision=precision, format=output_format, out=out)
    except ValidationError as e:
        _fail_usage(e)

    rows = parallel_map(_hurwitz_row, range(job.precision + 1), workers=_settings(ctx).workers)
    mismatches = [n for n, forms, l_value in rows if forms != l_value]

    if job.format == "json":
        payload = {
            "N": job.precision,
            "rows": [[n, format_rational(value), int(12 * value)] for n, value, _ in rows],
            "mismatches": mismatches,
        }
        _emit(json.dumps(payload, separators=(",", ":")), job.out)
    elif job.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "H", "12H"])
        for n, value, _ in rows:
            writer.writerow([n, format_rational(value), int(12 * value)])
        _emit(buffer.getvalue(), job.out)
    else:
        table = Table(title=f"H(n) for 0 <= n <= {job.precision}", header_style="bold magenta")
        table.add_column("n", justify="right", style="cyan")
        table.add_column("H(n)", justify="right")
        table.add_column("12H(n)", justify="right")
        for n, value, _ in rows:
            table.add_row(str(n), format_rational(value), str(int(12 * value)))
        console.print(table)

    if mismatches:
        for n, forms, l_value in rows:
            if forms != l_value:
                logger.error(f"H({n}): reduced forms give {forms}, L-value formula gives {l_value}")
        raise typer.Exit(EXIT_MISMATCH)


@app.command()
def verify(
    ctx: typer.Context,
    p: int = typer.Option(..., "-p", "--prime", help="Prime p >= 5"),
    l: int = typer.Option(1, "-l", "--level", help="Exponent l of the modulus p^l"),
    precision: int = typer.Option(100, "--precision", "-N", help="Highest exponent"),
    uncorrected: bool = typer.Option(False, "--uncorrected", help="Compare bare E_3/2 instead"),
    allow_deep: bool = typer.Option(False, "--allow-deep", help="Allow l > 2"),
    output_format: str = typer.Option("json", "--format", help="json, yaml or table"),
    out: Path | None = typer.Option(None, "--out", help="Write the certificate to this file"),
):
    """Certify the completed E_3/2 against (1 - p)/2 E_{k_l} mod p^l."""
    try:
        job = VerifyJob(
            p=p, l=l, precision=precision, uncorrected=uncorrected,
            allow_deep=allow_deep, format=output_format, out=out,
        )
    except (ValidationError, DomainError) as e:
        _fail_usage(e)

    try:
        certificate = verify_completion(
            job.p, job.l, job.precision, workers=_settings(ctx).workers,
            uncorrected=job.uncorrected, allow_deep=job.allow_deep,
        )
    except DomainError as e:
        _fail_usage(e)
    except MockEisensteinError as e:
        _fail_mismatch(e)

    if job.format == "json":
        _emit(certificate.to_json(), job.out)
    elif job.format == "yaml":
        _emit(certificate.to_yaml(), job.out)
    else:
        console.print(_certificate_table(certificate))
        for note in certificate.notes:
            console.print(f"[dim]{note}[/dim]")

    if not certificate.passed:
        raise typer.Exit(EXIT_MISMATCH)


@app.command()
def checks(
    ctx: typer.Context,
    suite: str = typer.Argument(..., help="koblitz, koblitz-negative, kummer, zeta, proof, weight-two or completion"),
    primes: str | None = typer.Option(None, "-p", "--primes", help="Comma-separated primes"),
    levels: str | None = typer.Option(None, "-l", "--levels", help="Comma-separated exponents l"),
    weights: str | None = typer.Option(None, "--weight", "-k", help="Comma-separated weights t/2"),
    precision: int | None = typer.Option(None, "--precision", "-N", help="Highest exponent of series checks"),
    max_d0: int = typer.Option(100, "--max-d0", help="Largest |D0| for the kummer suite"),
    max_m: int = typer.Option(100, "--max-m", help="Largest m for the proof suite"),
    allow_deep: bool = typer.Option(False, "--allow-deep", help="Allow l > 2 in the completion suite"),
    output_format: str = typer.Option("table", "--format", help="table, json, yaml or markdown"),
    out: Path | None = typer.Option(None, "--out", help="Write the suite result to this file"),
):
    """Run a named grid of congruence checks."""
    try:
        config = get_config_for_suite(suite)
        job = ChecksJob(
            suite=suite,
            primes=primes if primes is not None else config.default_primes,
            levels=levels if levels is not None else config.default_levels,
            weights=weights if weights is not None else config.default_weights,
            precision=precision,
            max_d0=max_d0,
            max_m=max_m,
            allow_deep=allow_deep,
            format=output_format,
            out=out,
        )
    except (ValidationError, ValueError) as e:
        _fail_usage(e)

    runner = CheckSuiteRunner(monitor=LoggingMonitor(), workers=_settings(ctx).workers)
    try:
        result = runner.run(job)
    except DomainError as e:
        _fail_usage(e)
    except MockEisensteinError as e:
        _fail_mismatch(e)

    if job.format == "json":
        _emit(json.dumps(result.to_dict(), separators=(",", ":")), job.out)
    elif job.format == "yaml":
        _emit(result.to_yaml(), job.out)
    elif job.format == "markdown":
        _emit(result.to_formatted_string(), job.out)
    else:
        table = Table(title=f"{job.suite}: {config.description}", header_style="bold magenta")
        table.add_column("#", justify="right", style="cyan")
        table.add_column("check")
        table.add_column("verdict", justify="center")
        for i, certificate in enumerate(result.certificates, start=1):
            verdict_style = "green" if certificate.passed else "red"
            table.add_row(str(i), certificate.summary_line(), f"[{verdict_style}]{certificate.verdict}[/{verdict_style}]")
        console.print(table)
        summary = result.summarise()
        console.print(f"{summary.num_passed}/{summary.total} passed, suite ok: {result.all_passed}")

    if not result.all_passed:
        raise typer.Exit(EXIT_MISMATCH)


@app.callback()
def main(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at DEBUG level"),
    workers: int | None = typer.Option(None, "--workers", "-j", help="Worker processes for per-exponent work"),
    cache_dir: Path | None = typer.Option(None, "--cache-dir", help="Directory of the Bernoulli cache"),
    no_cache: bool = typer.Option(False, "--no-cache", help="Do not read or write the Bernoulli cache"),
):
    """
    mock-eisenstein - exact arithmetic for Cohen Eisenstein series and the completed Zagier series.
    """
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%H:%M:%S'
    )

    try:
        settings = RuntimeSettings.from_env()
    except ValueError as e:
        _fail_usage(e)
    if workers is not None:
        settings.workers = workers
    if cache_dir is not None:
        settings.cache_dir = cache_dir
    settings.use_cache = not no_cache
    if settings.workers < 1:
        _fail_usage(DomainError(f"workers must be >= 1, got {settings.workers}"))
    ctx.obj = settings

    if settings.use_cache:
        try:
            configure_bernoulli_cache(NoSQLBernoulliCache(db_path=str(settings.cache_dir)))
        except (OSError, MockEisensteinError) as e:
            logger.warning(f"Bernoulli cache unavailable at {settings.cache_dir}, continuing without it: {e}")
            configure_bernoulli_cache(None)
    else:
        configure_bernoulli_cache(None)


if __name__ == "__main__":
    app()
