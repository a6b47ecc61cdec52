"""Export incidence and Dynkin graphs as DOT or JSON."""

from pathlib import Path

import click

from enlattice.cli.utils import (
    CLASS,
    check_class,
    echo_success,
    lattice_option,
    reports_errors,
    safe_load_settings,
)
from enlattice.constants import GRAPH_FORMATS, MAX_ALGEBRA_RANK
from enlattice.picard import DivisorClass
from enlattice.report.graphs import GraphKind, export_graph


@click.command()
@click.option("--n", "n", type=click.IntRange(1, MAX_ALGEBRA_RANK), required=True, help="Number of blowups")
@click.option(
    "--graph",
    "kind",
    type=click.Choice([k.value for k in GraphKind]),
    default=GraphKind.LINE_INCIDENCE.value,
    help="Which graph to export (default: line-incidence)",
)
@click.option("--r", "ruling", type=CLASS, help="Ruling for singular-fibers (default: H-L1)")
@click.option("--format", "fmt", type=click.Choice(GRAPH_FORMATS), default="dot", help="Output format")
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path), help="Write to a file instead of stdout")
@reports_errors
def export_command(n: int, kind: str, ruling: DivisorClass | None, fmt: str, output: Path | None) -> None:
    """Export a graph of X_n.

    Examples:
        enlattice export --n 6 --graph line-incidence --format dot
        enlattice export --n 7 --graph bitangent-pairs --format json -o bitangents.json
    """
    X = lattice_option(n, safe_load_settings())
    check_class(ruling, X, "--r")
    text = export_graph(kind, X, fmt, ruling)
    if output is None:
        click.echo(text, nl=False)
        return
    output.write_text(text)
    echo_success(f"Wrote {kind} graph of X_{n} to {output}")
