"""Bounded enumeration of divisor classes by their numerical type.

A query fixes D.D and D.K. Writing D = (a, b_1..b_n), these become
sum(b_i^2) = a^2 - D.D and sum(b_i) = 3a + D.K, so Cauchy-Schwarz bounds a to
the integer solutions of (9 - n)a^2 + 6(D.K)a + ((D.K)^2 + n(D.D)) <= 0.
For n <= 8 that interval is finite; the b_i are then found by recursive
descent with running-sum pruning.
"""

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from enlattice.constants import LINE_QUERY, ROOT_QUERY, RULING_QUERY
from enlattice.exceptions import DomainError
from enlattice.picard import DivisorClass, PicardLattice

logger = logging.getLogger(__name__)


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class ClassQuery:
    """Numerical criteria selecting a set of classes."""

    self_int: int
    k_int: int
    linear_constraints: tuple[tuple[DivisorClass, int], ...] = field(default_factory=tuple)
    parity_constraint: tuple[DivisorClass, Parity] | None = None

    def accepts(self, D: DivisorClass) -> bool:
        """Check the linear and parity constraints only."""
        for C, value in self.linear_constraints:
            if D.dot(C) != value:
                return False
        if self.parity_constraint is not None:
            C, parity = self.parity_constraint
            if D.dot(C) % 2 != (0 if parity == Parity.EVEN else 1):
                return False
        return True

    def check_rank(self, lattice: PicardLattice) -> None:
        refs = [C for C, _ in self.linear_constraints]
        if self.parity_constraint is not None:
            refs.append(self.parity_constraint[0])
        for C in refs:
            if not lattice.contains(C):
                raise DomainError(f"Constraint class {C.label()} is not on X_{lattice.n}")


LINES = ClassQuery(*LINE_QUERY)
RULINGS = ClassQuery(*RULING_QUERY)
ROOTS = ClassQuery(*ROOT_QUERY)


def degree_range(n: int, self_int: int, k_int: int) -> range:
    """Integer values of a allowed by Cauchy-Schwarz, for n <= 8."""
    lead = 9 - n
    if lead <= 0:
        raise DomainError(f"Degree range is unbounded on X_{n}; pass max_degree")
    disc = 36 * k_int * k_int - 4 * lead * (k_int * k_int + n * self_int)
    if disc < 0:
        return range(0)
    root = math.isqrt(disc)
    lo = (-6 * k_int - root) // (2 * lead) - 1
    hi = (-6 * k_int + root) // (2 * lead) + 2

    def admissible(a: int) -> bool:
        return lead * a * a + 6 * k_int * a + (k_int * k_int + n * self_int) <= 0

    valid = [a for a in range(lo, hi + 1) if admissible(a)]
    if not valid:
        return range(0)
    return range(valid[0], valid[-1] + 1)


def _descend(m: int, total: int, squares: int) -> Iterator[tuple[int, ...]]:
    """All integer m-tuples with the given sum and sum of squares, ascending."""
    if m == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    if squares < 0 or m * squares < total * total:
        return
    bound = math.isqrt(squares)
    for b in range(-bound, bound + 1):
        rest_total = total - b
        rest_squares = squares - b * b
        if m == 1:
            if rest_total == 0 and rest_squares == 0:
                yield (b,)
            continue
        if (m - 1) * rest_squares < rest_total * rest_total:
            continue
        for tail in _descend(m - 1, rest_total, rest_squares):
            yield (b,) + tail


@lru_cache(maxsize=256)
def _solve(n: int, self_int: int, k_int: int, max_degree: int | None) -> tuple[DivisorClass, ...]:
    if (self_int + k_int) % 2:
        # D.D + D.K is always even, so the query has no solutions.
        logger.debug(f"Query ({self_int}, {k_int}) is adjunction-odd; empty on X_{n}")
        return ()
    if n >= 9:
        if max_degree is None:
            raise DomainError(
                f"Classes of type ({self_int}, {k_int}) are infinite on X_{n}; "
                f"an explicit max_degree is required"
            )
        degrees: range = range(-max_degree, max_degree + 1)
    else:
        degrees = degree_range(n, self_int, k_int)
        if max_degree is not None:
            degrees = range(max(degrees.start, -max_degree), min(degrees.stop, max_degree + 1))

    found: list[DivisorClass] = []
    for a in degrees:
        squares = a * a - self_int
        total = 3 * a + k_int
        for b in _descend(n, total, squares):
            found.append(DivisorClass((a,) + b))
    logger.debug(f"X_{n} type ({self_int}, {k_int}): {len(found)} classes over a in {degrees}")
    return tuple(sorted(found))


def enumerate_classes(
    lattice: PicardLattice, query: ClassQuery, max_degree: int | None = None
) -> list[DivisorClass]:
    """Every class meeting the query, in lexicographic order of (a, b_1..b_n)."""
    query.check_rank(lattice)
    candidates = _solve(lattice.n, query.self_int, query.k_int, max_degree)
    return [D for D in candidates if query.accepts(D)]


def enumerate_lines(lattice: PicardLattice, max_degree: int | None = None) -> list[DivisorClass]:
    return enumerate_classes(lattice, LINES, max_degree)


def enumerate_rulings(lattice: PicardLattice, max_degree: int | None = None) -> list[DivisorClass]:
    return enumerate_classes(lattice, RULINGS, max_degree)


def enumerate_roots(lattice: PicardLattice, max_degree: int | None = None) -> list[DivisorClass]:
    return enumerate_classes(lattice, ROOTS, max_degree)


def is_line(D: DivisorClass, lattice: PicardLattice) -> bool:
    return lattice.contains(D) and D.dot(D) == -1 and D.dot(lattice.K) == -1


def is_ruling(D: DivisorClass, lattice: PicardLattice) -> bool:
    return lattice.contains(D) and D.dot(D) == 0 and D.dot(lattice.K) == -2


def is_root(D: DivisorClass, lattice: PicardLattice) -> bool:
    return lattice.contains(D) and D.dot(D) == -2 and D.dot(lattice.K) == 0
