"""Command-line interface for enlattice."""

from enlattice.cli.main import cli
from enlattice.cli.utils import (
    CLASS,
    DOT_WITH,
    ClassParam,
    DotWithParam,
    echo_error,
    echo_info,
    echo_success,
    echo_warning,
    render_report,
)

__all__ = [
    "cli",
    "CLASS",
    "DOT_WITH",
    "ClassParam",
    "DotWithParam",
    "render_report",
    "echo_success",
    "echo_error",
    "echo_warning",
    "echo_info",
]
