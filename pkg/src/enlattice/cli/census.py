"""Enumerate lines, rulings, roots or classes of a custom numerical type."""

import logging

import click

from enlattice.census import LINES, ROOTS, RULINGS, ClassQuery, enumerate_classes
from enlattice.cli.utils import (
    DOT_WITH,
    check_class,
    emit_json,
    emit_table,
    lattice_option,
    reports_errors,
    safe_load_settings,
)
from enlattice.constants import MAX_LATTICE_RANK, OUTPUT_FORMATS
from enlattice.picard import DivisorClass

logger = logging.getLogger(__name__)

KIND_QUERIES = {"lines": LINES, "rulings": RULINGS, "roots": ROOTS}


def build_query(
    kind: str,
    self_int: int | None,
    k_int: int | None,
    dot_with: tuple[tuple[DivisorClass, int], ...],
) -> ClassQuery:
    if kind == "custom":
        if self_int is None or k_int is None:
            raise click.UsageError("--kind custom needs both --self-int and --k-int")
        return ClassQuery(self_int, k_int, tuple(dot_with))
    if self_int is not None or k_int is not None:
        raise click.UsageError(f"--self-int/--k-int only apply to --kind custom, not {kind}")
    base = KIND_QUERIES[kind]
    return ClassQuery(base.self_int, base.k_int, tuple(dot_with))


@click.command()
@click.option("--n", "n", type=click.IntRange(0, MAX_LATTICE_RANK), required=True, help="Number of blowups")
@click.option(
    "--kind",
    type=click.Choice(["lines", "rulings", "roots", "custom"]),
    default="lines",
    help="Which classes to list (default: lines)",
)
@click.option("--self-int", type=int, help="D.D for --kind custom")
@click.option("--k-int", type=int, help="D.K for --kind custom")
@click.option("--dot-with", multiple=True, type=DOT_WITH, help="Constraint CLASS=V meaning D.CLASS = V")
@click.option("--max-degree", type=click.IntRange(min=0), help="Bound on |a|; required for n >= 9")
@click.option("--format", "fmt", type=click.Choice(OUTPUT_FORMATS), help="Output format")
@reports_errors
def enum_command(
    n: int,
    kind: str,
    self_int: int | None,
    k_int: int | None,
    dot_with: tuple[tuple[DivisorClass, int], ...],
    max_degree: int | None,
    fmt: str | None,
) -> None:
    """List every class of a numerical type on X_n.

    Examples:
        enlattice enum --n 6 --kind lines
        enlattice enum --n 7 --kind rulings --dot-with '[1,1,0,0,0,0,0,0]=0'
        enlattice enum --n 9 --kind custom --self-int -1 --k-int -1 --max-degree 3
    """
    settings = safe_load_settings({"budget.max_degree": max_degree, "output.format": fmt})
    X = lattice_option(n, settings)
    for C, _ in dot_with:
        check_class(C, X, "--dot-with")
    query = build_query(kind, self_int, k_int, dot_with)
    classes = enumerate_classes(X, query, settings.max_degree)
    logger.info(f"X_{n} {kind}: {len(classes)} classes")

    if settings.output_format == "json":
        emit_json(
            {
                "n": n,
                "kind": kind,
                "self_int": query.self_int,
                "k_int": query.k_int,
                "constraints": [{"class": C.to_json(), "value": v} for C, v in query.linear_constraints],
                "count": len(classes),
                "classes": [D.to_json() for D in classes],
            }
        )
        return

    rows = [[i, D.label(), D.to_json(), D.degree] for i, D in enumerate(classes, start=1)]
    emit_table(rows, ["#", "class", "coefficients", "degree"])
    click.echo(f"\n{len(classes)} {kind} on X_{n}")
