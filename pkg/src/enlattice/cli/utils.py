"""CLI utility functions for parameters, formatting and error handling."""

import functools
import json
import logging
from collections.abc import Callable
from typing import Any, TypeVar

import click
from tabulate import tabulate

from enlattice.config import ConfigError, RunSettings, load_settings
from enlattice.constants import EXIT_IDENTITY_FAILURE, EXIT_OK
from enlattice.exceptions import ClassParseError, EnlatticeError
from enlattice.picard import DivisorClass, PicardLattice, make_lattice
from enlattice.report import Report, Scope

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        force=True,
    )


def echo_success(message: str) -> None:
    """Print success message in green."""
    click.echo(click.style(f"✓ {message}", fg="green"))


def echo_error(message: str) -> None:
    """Print error message in red."""
    click.echo(click.style(f"✗ {message}", fg="red"), err=True)


def echo_warning(message: str) -> None:
    """Print warning message in yellow."""
    click.echo(click.style(f"⚠ {message}", fg="yellow"), err=True)


def echo_info(message: str) -> None:
    click.echo(f"ℹ {message}")


def echo_section_start(title: str, width: int = 70) -> None:
    """Print section header with separator."""
    click.echo(f"\n{'=' * width}")
    click.echo(title)
    click.echo(f"{'=' * width}\n")


class ClassParam(click.ParamType):
    """A divisor class given as a JSON array such as [1,-1,0,0]."""

    name = "class"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> DivisorClass:
        if isinstance(value, DivisorClass):
            return value
        field = f"--{param.name}" if param is not None and param.name else "class"
        try:
            return DivisorClass.from_json(value, field=field)
        except ClassParseError as e:
            self.fail(str(e), param, ctx)


class DotWithParam(click.ParamType):
    """CLASS=VALUE: a linear constraint D.CLASS = VALUE."""

    name = "class=value"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> tuple[DivisorClass, int]:
        if isinstance(value, tuple):
            return value
        text, sep, number = str(value).rpartition("=")
        if not sep:
            self.fail(f"expected CLASS=VALUE, got {value!r}", param, ctx)
        try:
            target = int(number)
        except ValueError:
            self.fail(f"value after '=' must be an integer, got {number!r}", param, ctx)
        try:
            return DivisorClass.from_json(text, field="--dot-with"), target
        except ClassParseError as e:
            self.fail(str(e), param, ctx)


CLASS = ClassParam()
DOT_WITH = DotWithParam()


def safe_load_settings(cli_args: dict[str, Any] | None = None) -> RunSettings:
    """Load settings with error handling and user-friendly messages."""
    try:
        return load_settings(cli_args)
    except ConfigError as e:
        echo_error(f"Configuration error: {e}")
        raise click.Abort() from e


def lattice_option(n: int, settings: RunSettings) -> PicardLattice:
    try:
        return make_lattice(n, settings.max_rank)
    except EnlatticeError as e:
        raise click.BadParameter(str(e), param_hint="--n") from e


def check_class(D: DivisorClass | None, lattice: PicardLattice, flag: str) -> DivisorClass | None:
    """Reject a class whose rank does not match X_n."""
    if D is not None and not lattice.contains(D):
        raise click.BadParameter(f"{D.to_json()} has rank {D.rank}, expected {lattice.n}", param_hint=flag)
    return D


def reports_errors(command: F) -> F:
    """Turn library errors into a message and exit code 1."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except ClassParseError as e:
            raise click.UsageError(str(e)) from e
        except EnlatticeError as e:
            logger.debug(f"{type(e).__name__}: {e}")
            echo_error(str(e))
            click.get_current_context().exit(EXIT_IDENTITY_FAILURE)

    return wrapper  # type: ignore[return-value]


def emit_json(data: Any) -> None:
    click.echo(json.dumps(data, indent=2))


def emit_table(rows: list[list[Any]], headers: list[str]) -> None:
    click.echo(tabulate(rows, headers=headers, tablefmt="simple"))


def render_report(report: Report, fmt: str) -> int:
    """Print a report and return the exit code it implies."""
    if fmt == "json":
        click.echo(report.to_json())
    else:
        rows = [
            [r.id, r.status, r.scope.value, r.lhs_size, r.rhs_size, r.counterexample or ""]
            for r in report.records
        ]
        emit_table(rows, ["identity", "status", "scope", "lhs", "rhs", "counterexample"])
        if report.timing:
            click.echo("")
            timing = [[name, f"{seconds:.3f}s"] for name, seconds in report.timing.items()]
            emit_table(timing, ["suite", "time"])
        click.echo("")
        passed = len(report.records) - len(report.failures)
        if report.verified:
            echo_success(f"{passed}/{len(report.records)} identities verified")
        else:
            echo_error(f"{len(report.failures)} of {len(report.records)} identities failed")
        sampled = [r for r in report.records if r.scope is Scope.SAMPLED]
        if sampled:
            echo_warning(f"{len(sampled)} of {len(report.records)} identities sampled, not exhaustive")
    for failure in report.failures:
        if failure.counterexample:
            logger.info(f"{failure.id}: counterexample {failure.counterexample}")
    return EXIT_OK if report.verified else EXIT_IDENTITY_FAILURE
