"""Enumeration of lines, rulings and roots, and configuration searches."""

from .configurations import (
    Pairing,
    PairingKind,
    find_dgons,
    incidence_graph,
    intersection_matrix,
    involution_pairs,
    singular_fibers,
)
from .enumerate import (
    LINES,
    ROOTS,
    RULINGS,
    ClassQuery,
    Parity,
    degree_range,
    enumerate_classes,
    enumerate_lines,
    enumerate_roots,
    enumerate_rulings,
    is_line,
    is_root,
    is_ruling,
)

__all__ = [
    "ClassQuery",
    "LINES",
    "Pairing",
    "PairingKind",
    "Parity",
    "ROOTS",
    "RULINGS",
    "degree_range",
    "enumerate_classes",
    "enumerate_lines",
    "enumerate_roots",
    "enumerate_rulings",
    "find_dgons",
    "incidence_graph",
    "intersection_matrix",
    "involution_pairs",
    "is_line",
    "is_root",
    "is_ruling",
    "singular_fibers",
]
