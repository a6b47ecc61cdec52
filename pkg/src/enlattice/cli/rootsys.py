"""Root system, Cartan matrix and Weyl orbit display."""

import click

from enlattice.cli.utils import (
    CLASS,
    check_class,
    emit_json,
    emit_table,
    lattice_option,
    reports_errors,
    safe_load_settings,
)
from enlattice.constants import MAX_ALGEBRA_RANK, MAX_WEYL_ORDER_RANK, OUTPUT_FORMATS
from enlattice.picard import DivisorClass
from enlattice.rootsys import build_root_system, weyl_group_order, weyl_orbit


@click.command()
@click.option("--n", "n", type=click.IntRange(1, MAX_ALGEBRA_RANK), required=True, help="Number of blowups")
@click.option(
    "--show",
    type=click.Choice(["cartan", "roots", "orbit", "order"]),
    default="cartan",
    help="What to display (default: cartan)",
)
@click.option("--seed", "seed_class", type=CLASS, help="Class whose Weyl orbit to list (default: L_1)")
@click.option("--format", "fmt", type=click.Choice(OUTPUT_FORMATS), help="Output format")
@reports_errors
def rootsys_command(n: int, show: str, seed_class: DivisorClass | None, fmt: str | None) -> None:
    """Show the E_n root system of X_n.

    Examples:
        enlattice rootsys --n 6
        enlattice rootsys --n 7 --show orbit --seed '[1,1,1,0,0,0,0,0]'
        enlattice rootsys --n 5 --show order
    """
    settings = safe_load_settings({"output.format": fmt})
    X = lattice_option(n, settings)
    check_class(seed_class, X, "--seed")
    system = build_root_system(X)
    as_json = settings.output_format == "json"

    if show == "cartan":
        cartan = system.cartan.to_json()
        if as_json:
            emit_json(
                {
                    "n": n,
                    "type": system.type,
                    "simple_roots": [D.to_json() for D in system.simple_roots],
                    "cartan": cartan,
                }
            )
            return
        click.echo(f"X_{n}: type {system.type}, {len(system.roots)} roots\n")
        emit_table(
            [[D.label(), *row] for D, row in zip(system.simple_roots, cartan, strict=True)],
            ["simple root", *(str(i) for i in range(1, system.rank + 1))],
        )
        return

    if show == "order":
        if n > MAX_WEYL_ORDER_RANK:
            raise click.BadParameter(f"Weyl group generation is limited to n <= {MAX_WEYL_ORDER_RANK}", param_hint="--n")
        order = weyl_group_order(system)
        if as_json:
            emit_json({"n": n, "type": system.type, "weyl_order": order})
        else:
            click.echo(f"|W({system.type})| = {order}")
        return

    if show == "roots":
        classes = list(system.roots)
        title = "roots"
    else:
        seed = seed_class if seed_class is not None else X.L(1)
        classes = weyl_orbit(seed, system, settings.orbit_cap)
        title = f"orbit of {seed.label()}"

    if as_json:
        emit_json({"n": n, "show": show, "count": len(classes), "classes": [D.to_json() for D in classes]})
        return
    emit_table([[i, D.label(), D.to_json()] for i, D in enumerate(classes, start=1)], ["#", "class", "coefficients"])
    click.echo(f"\n{len(classes)} classes in the {title}")
