"""Lie algebra identity checks for a single E_n."""

import click

from enlattice import __version__
from enlattice.cli.utils import lattice_option, render_report, reports_errors, safe_load_settings
from enlattice.constants import MAX_ALGEBRA_RANK, OUTPUT_FORMATS
from enlattice.report import Report
from enlattice.report.suites import forms_records, jacobi_records, module_records

CHECKS = {
    "jacobi": jacobi_records,
    "module-axiom": module_records,
    "forms": forms_records,
}


@click.command()
@click.option("--n", "n", type=click.IntRange(1, MAX_ALGEBRA_RANK), required=True, help="Rank of E_n")
@click.option("--check", type=click.Choice(list(CHECKS)), default="jacobi", help="Identity to check")
@click.option("--samples", type=click.IntRange(min=1), help="Sample this many tuples instead of the default scope")
@click.option("--seed", type=int, help="Sampling seed")
@click.option("--format", "fmt", type=click.Choice(OUTPUT_FORMATS), help="Output format")
@click.pass_context
@reports_errors
def algebra_command(
    ctx: click.Context, n: int, check: str, samples: int | None, seed: int | None, fmt: str | None
) -> None:
    """Check an identity of E_n or its modules.

    Jacobi is exhaustive up to n = 6, the module axiom up to n = 6 on lines
    and n = 5 on rulings; beyond that, or when --samples is given, random
    tuples are drawn with the configured seed.

    Examples:
        enlattice algebra --n 6 --check jacobi
        enlattice algebra --n 7 --check forms --samples 20000 --format json
    """
    settings = safe_load_settings(
        {"budget.samples": samples, "sampling.seed": seed, "output.format": fmt}
    )
    lattice_option(n, settings)
    if check == "forms" and not 5 <= n <= 8:
        raise click.BadParameter("invariant forms are checked for n = 5..8", param_hint="--n")
    report = Report(
        suite=f"algebra.{check}",
        version=__version__,
        inputs={"n": n, "samples": samples, "seed": settings.seed},
    )
    report.extend(CHECKS[check](n, settings, samples))
    ctx.exit(render_report(report, settings.output_format))
