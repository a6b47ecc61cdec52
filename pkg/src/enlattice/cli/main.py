"""Main CLI entry point for the enlattice command.

This module provides the main CLI group and registers all subcommands.
"""

import click
from dotenv import load_dotenv

from enlattice import __version__
from enlattice.cli.algebra import algebra_command
from enlattice.cli.branch import branch_command
from enlattice.cli.census import enum_command
from enlattice.cli.export import export_command
from enlattice.cli.rootsys import rootsys_command
from enlattice.cli.utils import configure_logging
from enlattice.cli.verify import verify_command


@click.group()
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False),
    help="Path to an env file with ENLATTICE_* settings (default: .env)",
)
@click.option("--verbose", "-v", is_flag=True, help="Verbose output")
@click.version_option(version=__version__, prog_name="enlattice")
@click.pass_context
def cli(ctx: click.Context, config: str | None, verbose: bool) -> None:
    """enlattice - line, ruling and root combinatorics of del Pezzo surfaces.

    Enumerates classes on the blowup X_n of the plane in n points, builds
    E_n and its line and ruling modules from that data, and verifies the
    branching identities relating them.

    Examples:

        # The 27 lines on a cubic surface
        enlattice enum --n 6 --kind lines

        # E_7 and its modules restricted to a fixed ruling
        enlattice branch --n 7 --fix ruling

        # Every identity up to X_6
        enlattice verify all --n-max 6
    """
    ctx.ensure_object(dict)
    ctx.obj["config"] = config
    ctx.obj["verbose"] = verbose

    configure_logging(verbose)

    if config:
        load_dotenv(config)
    else:
        load_dotenv()


cli.add_command(enum_command, name="enum")
cli.add_command(rootsys_command, name="rootsys")
cli.add_command(algebra_command, name="algebra")
cli.add_command(branch_command, name="branch")
cli.add_command(verify_command, name="verify")
cli.add_command(export_command, name="export")


if __name__ == "__main__":
    cli()
