"""Bimultiplicative sign cocycle on K-perp.

With Gram matrix g of an ordered basis e_i, take M_ij = g_ij for i > j,
M_ii = g_ii / 2 and M_ij = 0 for i < j. Then eps(x, y) = (-1)^(x^T M y)
satisfies eps(x, y) eps(y, x) = (-1)^(x.y) and eps(x, x) = (-1)^(x.x / 2).
"""

import logging
from collections.abc import Sequence
from fractions import Fraction

import numpy as np
import sympy

from enlattice.constants import MAX_ALGEBRA_RANK
from enlattice.exceptions import ConstructionError, DomainError
from enlattice.picard import DivisorClass, PicardLattice, gram_matrix, kperp_basis

logger = logging.getLogger(__name__)


class SignCocycle:
    """eps: K-perp x K-perp -> {+1, -1}, fixed by its values on a basis."""

    def __init__(self, lattice: PicardLattice, basis: Sequence[DivisorClass]):
        self.lattice = lattice
        self.basis = tuple(basis)
        gram = gram_matrix(self.basis)
        size = len(self.basis)
        self._exponents = np.array(
            [
                [(gram[i][j] if i > j else gram[i][i] // 2 if i == j else 0) % 2 for j in range(size)]
                for i in range(size)
            ],
            dtype=np.int64,
        ).reshape(size, size)
        if size:
            inverse = sympy.Matrix(gram).inv()
            self._inverse = [
                [Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(size)]
                for i in range(size)
            ]
        else:
            self._inverse = []
        self._coords: dict[DivisorClass, tuple[int, ...]] = {}
        self.table = tuple(tuple(self.sign(a, b) for b in self.basis) for a in self.basis)

    @property
    def size(self) -> int:
        return len(self.basis)

    def coordinates(self, D: DivisorClass) -> tuple[int, ...]:
        """Integer coordinates of a K-perp class in the cocycle basis."""
        cached = self._coords.get(D)
        if cached is not None:
            return cached
        if D.dot(self.lattice.K) != 0:
            raise DomainError(f"{D.label()} is not orthogonal to K")
        pairings = [e.dot(D) for e in self.basis]
        coords: list[int] = []
        for row in self._inverse:
            value = sum((c * p for c, p in zip(row, pairings, strict=True)), Fraction(0))
            if value.denominator != 1:
                raise ConstructionError(f"{D.label()} has non-integral coordinates {value}")
            coords.append(int(value))
        result = tuple(coords)
        self._coords[D] = result
        return result

    def exponent(self, x: DivisorClass, y: DivisorClass) -> int:
        cx = np.array(self.coordinates(x), dtype=np.int64)
        cy = np.array(self.coordinates(y), dtype=np.int64)
        if not self.size:
            return 0
        return int(cx @ self._exponents @ cy) % 2

    def sign(self, x: DivisorClass, y: DivisorClass) -> int:
        return -1 if self.exponent(x, y) else 1

    def __call__(self, x: DivisorClass, y: DivisorClass) -> int:
        return self.sign(x, y)

    def sign_table(self, xs: Sequence[DivisorClass], ys: Sequence[DivisorClass]) -> np.ndarray:
        """Matrix of eps(x, y) over two lists of K-perp classes."""
        if not xs or not ys or not self.size:
            return np.ones((len(xs), len(ys)), dtype=np.int64)
        cx = np.array([self.coordinates(x) for x in xs], dtype=np.int64) % 2
        cy = np.array([self.coordinates(y) for y in ys], dtype=np.int64) % 2
        return 1 - 2 * ((cx @ self._exponents @ cy.T) % 2)

    def violations(self, classes: Sequence[DivisorClass]) -> list[tuple[DivisorClass, DivisorClass]]:
        """Pairs from the list breaking either defining identity."""
        bad: list[tuple[DivisorClass, DivisorClass]] = []
        for x in classes:
            if self.sign(x, x) != (-1) ** ((x.dot(x) // 2) % 2):
                bad.append((x, x))
            for y in classes:
                if self.sign(x, y) * self.sign(y, x) != (-1) ** (x.dot(y) % 2):
                    bad.append((x, y))
        return bad


def build_cocycle(lattice: PicardLattice) -> SignCocycle:
    """Cocycle on the K-perp basis, self-checked on all basis pairs."""
    if lattice.n > MAX_ALGEBRA_RANK:
        raise DomainError(
            f"K-perp is degenerate or indefinite on X_{lattice.n}; cocycles need n <= {MAX_ALGEBRA_RANK}"
        )
    cocycle = SignCocycle(lattice, kperp_basis(lattice))
    bad = cocycle.violations(list(cocycle.basis))
    if bad:
        x, y = bad[0]
        raise ConstructionError(f"Cocycle identity fails on basis pair ({x.label()}, {y.label()})")
    logger.debug(f"Built sign cocycle on X_{lattice.n} over {cocycle.size} basis classes")
    return cocycle
