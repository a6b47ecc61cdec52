"""Picard lattice arithmetic."""

from .lattice import (
    DivisorClass,
    PicardLattice,
    canonical_class,
    gram_matrix,
    intersect,
    kperp_basis,
    make_lattice,
    rational_dot,
    sum_classes,
)

__all__ = [
    "DivisorClass",
    "PicardLattice",
    "canonical_class",
    "gram_matrix",
    "intersect",
    "kperp_basis",
    "make_lattice",
    "rational_dot",
    "sum_classes",
]
