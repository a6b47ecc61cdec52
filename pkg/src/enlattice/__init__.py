"""Enlattice - divisor-class combinatorics on del Pezzo surfaces.

Enumerates lines, rulings and roots in the Picard lattice of a blowup of the
plane at n points, builds the exceptional Lie algebra E_n and its weight
modules from that data, and verifies branching rules and invariant forms as
exact identities.
"""

__version__ = "0.1.0"

from . import config

__all__ = ["config", "__version__"]
