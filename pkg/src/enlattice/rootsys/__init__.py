"""Root systems, Cartan matrices and Weyl group actions."""

from .dynkin import CartanMatrix, dynkin_graph, dynkin_type
from .system import (
    RootSystem,
    apply_word,
    build_root_system,
    reflect,
    simple_coordinates,
    simple_system,
    standard_simple_roots,
    weyl_group_order,
    weyl_orbit,
    weyl_word,
)

__all__ = [
    "CartanMatrix",
    "RootSystem",
    "apply_word",
    "build_root_system",
    "dynkin_graph",
    "dynkin_type",
    "reflect",
    "simple_coordinates",
    "simple_system",
    "standard_simple_roots",
    "weyl_group_order",
    "weyl_orbit",
    "weyl_word",
]
