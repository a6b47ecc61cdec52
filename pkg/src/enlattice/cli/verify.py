"""Run the verification suites."""

import click

from enlattice.cli.utils import echo_info, render_report, reports_errors, safe_load_settings
from enlattice.constants import MAX_ALGEBRA_RANK, OUTPUT_FORMATS
from enlattice.report.suites import SUITES, run_suites


@click.command()
@click.argument("suites", nargs=-1, type=click.Choice(["all", *SUITES]))
@click.option("--n-max", type=click.IntRange(1, MAX_ALGEBRA_RANK), default=MAX_ALGEBRA_RANK, help="Largest n to visit")
@click.option("--samples", type=click.IntRange(min=1), help="Sample count for sampled identities")
@click.option("--seed", type=int, help="Sampling seed")
@click.option("--timing", is_flag=True, help="Include per-suite timing in the report")
@click.option("--format", "fmt", type=click.Choice(OUTPUT_FORMATS), help="Output format")
@click.pass_context
@reports_errors
def verify_command(
    ctx: click.Context,
    suites: tuple[str, ...],
    n_max: int,
    samples: int | None,
    seed: int | None,
    timing: bool,
    fmt: str | None,
) -> None:
    """Verify identities across X_1..X_{n-max}; exit 1 if any fails.

    With no suite names, or with 'all', every suite runs in a fixed order.

    Examples:
        enlattice verify all --n-max 6
        enlattice verify census fixed-line --n-max 8 --format json
        enlattice verify forms --timing
    """
    settings = safe_load_settings({"budget.samples": samples, "sampling.seed": seed, "output.format": fmt})
    names = None if not suites or "all" in suites else list(suites)
    if settings.output_format != "json":
        echo_info(f"Running {', '.join(names) if names else 'all suites'} up to n = {n_max}")
    report = run_suites(names, n_max, settings, timing=timing)
    ctx.exit(render_report(report, settings.output_format))
