"""Picard lattice of the plane blown up at n points.

A class D = aH - sum(b_i L_i) is stored as the integer tuple (a, b_1, ..., b_n).
The intersection form is diag(1, -1, ..., -1) and the canonical class is
K = -3H + sum(L_i), stored as (-3, -1, ..., -1).
"""

import json
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from enlattice.constants import MAX_LATTICE_RANK
from enlattice.exceptions import ClassParseError, DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class DivisorClass:
    """An integer divisor class on X_n.

    Classes on lattices of different rank never compare equal, since their
    coefficient tuples differ in length.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise DomainError("A divisor class needs at least the H coefficient")
        if not all(isinstance(c, int) for c in self.coeffs):
            object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> "DivisorClass":
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, n: int) -> "DivisorClass":
        return cls((0,) * (n + 1))

    @classmethod
    def hyperplane(cls, n: int) -> "DivisorClass":
        return cls((1,) + (0,) * n)

    @classmethod
    def exceptional(cls, n: int, i: int) -> "DivisorClass":
        """The exceptional class L_i, 1-based."""
        if not 1 <= i <= n:
            raise DomainError(f"Exceptional index {i} outside 1..{n}")
        coeffs = [0] * (n + 1)
        coeffs[i] = -1
        return cls(tuple(coeffs))

    @property
    def rank(self) -> int:
        """Blowup count n of the lattice this class lives in."""
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        return self.coeffs[0]

    def _check_rank(self, other: "DivisorClass") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise DomainError(
                f"Rank mismatch: X_{self.rank} class {self.label()} "
                f"against X_{other.rank} class {other.label()}"
            )

    def dot(self, other: "DivisorClass") -> int:
        self._check_rank(other)
        a, *b = self.coeffs
        a2, *b2 = other.coeffs
        return a * a2 - sum(x * y for x, y in zip(b, b2, strict=True))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_rank(other)
        return DivisorClass(tuple(x + y for x, y in zip(self.coeffs, other.coeffs, strict=True)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_rank(other)
        return DivisorClass(tuple(x - y for x, y in zip(self.coeffs, other.coeffs, strict=True)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-x for x in self.coeffs))

    def __mul__(self, scalar: int) -> "DivisorClass":
        return DivisorClass(tuple(scalar * x for x in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self) -> "DivisorClass":
        """Drop the last exceptional coefficient, the inverse of pullback."""
        if self.rank == 0:
            raise DomainError("Cannot truncate a class on X_0")
        return DivisorClass(self.coeffs[:-1])

    def pullback(self) -> "DivisorClass":
        """Pull back to X_{n+1} along the blowup of one more point."""
        return DivisorClass(self.coeffs + (0,))

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: object, field: str = "class") -> "DivisorClass":
        """Parse a class from its JSON array [a, b_1, ..., b_n]."""
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as e:
                raise ClassParseError(field, f"not valid JSON ({e.msg})") from e
        if not isinstance(data, list) or not data:
            raise ClassParseError(field, "expected a non-empty JSON array of integers")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in data):
            raise ClassParseError(field, "every coefficient must be an integer")
        if len(data) - 1 > MAX_LATTICE_RANK:
            raise ClassParseError(field, f"rank {len(data) - 1} exceeds {MAX_LATTICE_RANK}")
        return cls(tuple(data))

    def label(self) -> str:
        """Human-readable form such as 2H-L1-L2."""
        a, *b = self.coeffs
        parts: list[str] = []
        if a:
            parts.append("H" if a == 1 else "-H" if a == -1 else f"{a}H")
        for i, c in enumerate(b, start=1):
            if not c:
                continue
            coeff = -c
            sign = "+" if coeff > 0 else "-"
            mag = abs(coeff)
            term = f"L{i}" if mag == 1 else f"{mag}L{i}"
            if not parts and sign == "+":
                parts.append(term)
            else:
                parts.append(f"{sign}{term}")
        return "".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class PicardLattice:
    """Pic(X_n) with form diag(1, -1^n)."""

    n: int

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_LATTICE_RANK:
            raise DomainError(f"Blowup count n={self.n} outside 0..{MAX_LATTICE_RANK}")

    @property
    def rank(self) -> int:
        return self.n + 1

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple((1 if i == 0 else -1) if i == j else 0 for j in range(self.rank))
            for i in range(self.rank)
        )

    @cached_property
    def K(self) -> DivisorClass:  # noqa: N802
        return DivisorClass((-3,) + (-1,) * self.n)

    @property
    def H(self) -> DivisorClass:  # noqa: N802
        return DivisorClass.hyperplane(self.n)

    def L(self, i: int) -> DivisorClass:  # noqa: N802
        return DivisorClass.exceptional(self.n, i)

    def make(self, *coeffs: int) -> DivisorClass:
        """Build a class on this lattice, checking the coefficient count."""
        if len(coeffs) != self.rank:
            raise DomainError(f"X_{self.n} classes take {self.rank} coefficients, got {len(coeffs)}")
        return DivisorClass(tuple(coeffs))

    def contains(self, D: DivisorClass) -> bool:
        return D.rank == self.n

    def project_to_kperp(self, D: DivisorClass) -> tuple[Fraction, ...]:
        """Orthogonal projection of D onto K-perp, in Pic coordinates.

        Undefined when K.K = 0, i.e. n = 9.
        """
        k2 = self.K.dot(self.K)
        if k2 == 0:
            raise DomainError("K is isotropic on X_9; no orthogonal projection")
        t = Fraction(D.dot(self.K), k2)
        return tuple(Fraction(c) - t * k for c, k in zip(D.coeffs, self.K.coeffs, strict=True))


def make_lattice(n: int, max_rank: int = MAX_LATTICE_RANK) -> PicardLattice:
    """Return the Picard lattice of X_n for 0 <= n <= max_rank.

    max_rank is the configured cap (limits.max_rank) and can only lower
    MAX_LATTICE_RANK.
    """
    if n > max_rank:
        raise DomainError(f"Blowup count n={n} exceeds the configured limit max_rank={max_rank}")
    return PicardLattice(n)


def intersect(D1: DivisorClass, D2: DivisorClass) -> int:
    """Intersection number a1*a2 - sum(b1_i*b2_i)."""
    return D1.dot(D2)


def canonical_class(lattice: PicardLattice) -> DivisorClass:
    return lattice.K


def kperp_basis(lattice: PicardLattice) -> list[DivisorClass]:
    """A Z-basis of K-perp with n elements.

    For n >= 3 this is H-L1-L2-L3 followed by L_i - L_{i+1}; the two smallest
    cases use ad hoc bases with the same discriminant 9 - n.
    """
    n = lattice.n
    if n == 0:
        return []
    if n == 1:
        return [lattice.make(1, 3)]
    if n == 2:
        return [lattice.make(0, 1, -1), lattice.make(1, 2, 1)]
    basis = [lattice.H - lattice.L(1) - lattice.L(2) - lattice.L(3)]
    basis.extend(lattice.L(i) - lattice.L(i + 1) for i in range(1, n))
    return basis


def gram_matrix(classes: Sequence[DivisorClass]) -> list[list[int]]:
    return [[x.dot(y) for y in classes] for x in classes]


def sum_classes(classes: Iterable[DivisorClass], n: int) -> DivisorClass:
    total = DivisorClass.zero(n)
    for c in classes:
        total = total + c
    return total


def rational_dot(v: Sequence[Fraction], w: Sequence[Fraction | int]) -> Fraction:
    """Intersection pairing for rational Pic vectors."""
    if len(v) != len(w):
        raise DomainError("Rank mismatch in rational pairing")
    return Fraction(v[0]) * w[0] - sum((Fraction(x) * y for x, y in zip(v[1:], w[1:], strict=True)), Fraction(0))
