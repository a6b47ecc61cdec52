"""Branching of E_n, L_n and R_n under a fixed geometric subalgebra."""

import logging

import click

from enlattice import __version__
from enlattice.branching import (
    BranchingResult,
    decompose_fixed_line,
    decompose_fixed_ruling,
    decompose_parity,
    decompose_section,
    e7_centralizer,
)
from enlattice.cli.utils import (
    CLASS,
    check_class,
    echo_section_start,
    emit_table,
    lattice_option,
    render_report,
    reports_errors,
    safe_load_settings,
)
from enlattice.constants import MAX_ALGEBRA_RANK, OUTPUT_FORMATS
from enlattice.picard import DivisorClass, PicardLattice
from enlattice.report import Report

logger = logging.getLogger(__name__)

FIXES = ("line", "ruling", "section", "parity", "a1-pair")


def run_branching(
    fix: str,
    X: PicardLattice,
    line: DivisorClass | None = None,
    ruling: DivisorClass | None = None,
    section: DivisorClass | None = None,
    degree_class: DivisorClass | None = None,
    second_line: DivisorClass | None = None,
    which: str | None = None,
) -> BranchingResult:
    """Dispatch to the decomposition for one kind of fixed data.

    Missing classes default to the standard ones: L_n, H-L_1, L_1 and L_2.
    """
    n = X.n
    if fix == "line":
        return decompose_fixed_line(X, line if line is not None else X.L(n))
    if fix == "ruling":
        return decompose_fixed_ruling(X, ruling if ruling is not None else X.H - X.L(1))
    if fix == "section":
        R = ruling if ruling is not None else X.H - X.L(1)
        return decompose_section(X, R, section if section is not None else X.L(1), which)  # type: ignore[arg-type]
    if n != 8:
        raise click.BadParameter(f"--fix {fix} needs n = 8", param_hint="--n")
    if fix == "parity":
        return decompose_parity(X, degree_class)
    first = line if line is not None else X.L(1)
    return e7_centralizer(X, first, second_line if second_line is not None else X.L(2))


def echo_decompositions(result: BranchingResult) -> None:
    echo_section_start(result.spec.describe())
    for decomposition in result.decompositions:
        click.echo(f"{decomposition.name}: {decomposition.statement}")
        rows = [
            [component.label, component.rank, component.twist.label() if component.twist is not None else ""]
            for component in decomposition.components
        ]
        emit_table(rows, ["component", "rank", "twist"])
        click.echo("")


@click.command()
@click.option("--n", "n", type=click.IntRange(2, MAX_ALGEBRA_RANK), required=True, help="Number of blowups")
@click.option("--fix", type=click.Choice(FIXES), required=True, help="Geometric data to fix")
@click.option("--l", "line", type=CLASS, help="Fixed line (line, a1-pair)")
@click.option("--r", "ruling", type=CLASS, help="Fixed ruling (ruling, section)")
@click.option("--s", "section", type=CLASS, help="Section of the ruling: a line or a root (section)")
@click.option("--h", "degree_class", type=CLASS, help="Degree class splitting E_8 by parity (parity)")
@click.option("--l2", "second_line", type=CLASS, help="Second line; L1-L2 is the fixed root (a1-pair)")
@click.option("--which", type=click.Choice(["plus", "minus"]), help="Restrict section spinors to S+ or S-")
@click.option("--format", "fmt", type=click.Choice(OUTPUT_FORMATS), help="Output format")
@click.pass_context
@reports_errors
def branch_command(
    ctx: click.Context,
    n: int,
    fix: str,
    line: DivisorClass | None,
    ruling: DivisorClass | None,
    section: DivisorClass | None,
    degree_class: DivisorClass | None,
    second_line: DivisorClass | None,
    which: str | None,
    fmt: str | None,
) -> None:
    """Decompose E_n and its modules under a fixed line, ruling, section or parity.

    Examples:
        enlattice branch --n 6 --fix line
        enlattice branch --n 7 --fix ruling --r '[1,0,1,0,0,0,0,0]'
        enlattice branch --n 5 --fix section --s '[0,-1,1,0,0,0]' --format json
        enlattice branch --n 8 --fix parity
    """
    settings = safe_load_settings({"output.format": fmt})
    X = lattice_option(n, settings)
    for D, flag in (
        (line, "--l"),
        (ruling, "--r"),
        (section, "--s"),
        (degree_class, "--h"),
        (second_line, "--l2"),
    ):
        check_class(D, X, flag)

    result = run_branching(fix, X, line, ruling, section, degree_class, second_line, which)
    logger.info(f"{result.spec.describe()}: verified={result.verified}")

    report = Report(
        suite=f"branch.{fix}",
        version=__version__,
        inputs={
            "n": n,
            "spec": result.spec.describe(),
        },
    )
    report.extend(result.records())
    if settings.output_format != "json":
        echo_decompositions(result)
    ctx.exit(render_report(report, settings.output_format))
