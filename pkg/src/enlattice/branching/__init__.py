"""Branching of E_n and its modules under geometric subalgebras."""

from .degenerations import DegenerationCase, all_degenerations, degeneration_counts
from .fixed_line import decompose_fixed_line, line_frame
from .fixed_ruling import RulingSets, clifford_check, decompose_fixed_ruling, ruling_sets
from .parity import decompose_parity, e7_centralizer, w8_checks
from .sections import decompose_section
from .small_n import small_n_checks
from .spec import BranchingResult, Component, Decomposition, SpecKind, SubalgebraSpec

__all__ = [
    "BranchingResult",
    "Component",
    "DegenerationCase",
    "Decomposition",
    "RulingSets",
    "SpecKind",
    "SubalgebraSpec",
    "all_degenerations",
    "clifford_check",
    "decompose_fixed_line",
    "decompose_fixed_ruling",
    "decompose_parity",
    "decompose_section",
    "degeneration_counts",
    "e7_centralizer",
    "line_frame",
    "ruling_sets",
    "small_n_checks",
    "w8_checks",
]
