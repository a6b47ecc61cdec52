"""The Lie algebra E_n built from the root datum of X_n.

Elements are h + sum(c_D x_D) with h a rational vector in K-perp and D
running over roots. The bracket is

    [h, x_D] = (h.D) x_D
    [x_A, x_-A] = A
    [x_A, x_B] = eps(A, B) x_{A+B}   if A.B = 1, zero otherwise

which is the lattice construction of a simply-laced algebra written in the
negative definite intersection form.
"""

import logging
from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from enlattice.exceptions import DomainError
from enlattice.picard import DivisorClass, PicardLattice, kperp_basis, rational_dot
from enlattice.rootsys import RootSystem, build_root_system

from .cocycle import SignCocycle, build_cocycle

logger = logging.getLogger(__name__)

Terms = tuple[tuple[DivisorClass, Fraction], ...]


def normalize_terms(terms: dict[DivisorClass, Fraction]) -> Terms:
    return tuple(sorted((D, Fraction(c)) for D, c in terms.items() if c))


def _vector(values: Iterable[Fraction | int]) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Element:
    """A formal sum h + sum(c_D x_D); h is stored in Pic coordinates."""

    cartan: tuple[Fraction, ...]
    roots: Terms = ()

    @classmethod
    def zero(cls, n: int) -> "Element":
        return cls((Fraction(0),) * (n + 1))

    @classmethod
    def root_vector(cls, D: DivisorClass, coeff: Fraction | int = 1) -> "Element":
        return cls((Fraction(0),) * len(D.coeffs), normalize_terms({D: Fraction(coeff)}))

    @classmethod
    def from_cartan(cls, h: DivisorClass | Sequence[Fraction | int]) -> "Element":
        values = h.coeffs if isinstance(h, DivisorClass) else h
        return cls(_vector(values))

    @property
    def rank(self) -> int:
        return len(self.cartan) - 1

    def root_terms(self) -> dict[DivisorClass, Fraction]:
        return dict(self.roots)

    def coefficient(self, D: DivisorClass) -> Fraction:
        return self.root_terms().get(D, Fraction(0))

    def has_cartan(self) -> bool:
        return any(self.cartan)

    def is_zero(self) -> bool:
        return not self.roots and not self.has_cartan()

    def _combine(self, other: "Element", sign: int) -> "Element":
        if self.rank != other.rank:
            raise DomainError(f"Rank mismatch: X_{self.rank} element against X_{other.rank}")
        terms: dict[DivisorClass, Fraction] = defaultdict(Fraction, self.roots)
        for D, c in other.roots:
            terms[D] += sign * c
        cartan = tuple(a + sign * b for a, b in zip(self.cartan, other.cartan, strict=True))
        return Element(cartan, normalize_terms(terms))

    def __add__(self, other: "Element") -> "Element":
        return self._combine(other, 1)

    def __sub__(self, other: "Element") -> "Element":
        return self._combine(other, -1)

    def __neg__(self) -> "Element":
        return self.scale(-1)

    def scale(self, c: Fraction | int) -> "Element":
        c = Fraction(c)
        if not c:
            return Element.zero(self.rank)
        return Element(tuple(c * x for x in self.cartan), tuple((D, c * v) for D, v in self.roots))

    def __rmul__(self, c: Fraction | int) -> "Element":
        return self.scale(c)

    def __str__(self) -> str:
        parts = [f"{c}*x[{D.label()}]" for D, c in self.roots]
        if self.has_cartan():
            parts.insert(0, "h(" + ",".join(str(x) for x in self.cartan) + ")")
        return " + ".join(parts) if parts else "0"


class LieAlgebra:
    """Cartan K-perp plus root spaces, with structure constants from a cocycle."""

    def __init__(self, system: RootSystem, cocycle: SignCocycle, name: str | None = None):
        if cocycle.lattice != system.lattice:
            raise DomainError("Cocycle and root system live on different lattices")
        self.system = system
        self.cocycle = cocycle
        self.lattice: PicardLattice = system.lattice
        self.name = name or f"E{system.lattice.n}"

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def roots(self) -> tuple[DivisorClass, ...]:
        return self.system.roots

    @cached_property
    def root_set(self) -> frozenset[DivisorClass]:
        return frozenset(self.system.roots)

    @property
    def cartan_rank(self) -> int:
        return self.n

    @property
    def dimension(self) -> int:
        return self.cartan_rank + len(self.roots)

    def cartan_basis(self) -> list[Element]:
        return [Element.from_cartan(e) for e in kperp_basis(self.lattice)]

    def basis(self) -> list[Element]:
        """Cartan basis first, then root vectors in root order."""
        return self.cartan_basis() + [Element.root_vector(D) for D in self.roots]

    def root_vector(self, D: DivisorClass, coeff: Fraction | int = 1) -> Element:
        if D not in self.root_set:
            raise DomainError(f"{D.label()} is not a root of {self.name}")
        return Element.root_vector(D, coeff)

    def cartan_element(self, h: DivisorClass | Sequence[Fraction | int]) -> Element:
        element = Element.from_cartan(h)
        if element.rank != self.n:
            raise DomainError(f"Cartan vector has rank {element.rank}, algebra has {self.n}")
        if rational_dot(element.cartan, self.lattice.K.coeffs):
            raise DomainError("Cartan elements must be orthogonal to K")
        return element

    def check(self, x: Element) -> None:
        """Raise DomainError unless x belongs to this algebra."""
        if x.rank != self.n:
            raise DomainError(f"Element of X_{x.rank} used in {self.name} on X_{self.n}")
        for D, _ in x.roots:
            if D not in self.root_set:
                raise DomainError(f"{D.label()} is not a root of {self.name}")

    def bracket(self, x: Element, y: Element) -> Element:
        self.check(x)
        self.check(y)
        return self._bracket(x, y)

    def _bracket(self, x: Element, y: Element) -> Element:
        cartan = [Fraction(0)] * (self.n + 1)
        terms: dict[DivisorClass, Fraction] = defaultdict(Fraction)
        if x.has_cartan():
            for D, c in y.roots:
                weight = rational_dot(x.cartan, D.coeffs)
                if weight:
                    terms[D] += weight * c
        if y.has_cartan():
            for D, c in x.roots:
                weight = rational_dot(y.cartan, D.coeffs)
                if weight:
                    terms[D] -= weight * c
        for A, a in x.roots:
            for B, b in y.roots:
                pairing = A.dot(B)
                if pairing == 2:
                    # B = -A
                    for i, coeff in enumerate(A.coeffs):
                        cartan[i] += a * b * coeff
                elif pairing == 1:
                    terms[A + B] += self.cocycle.sign(A, B) * a * b
        return Element(tuple(cartan), normalize_terms(terms))

    def killing_form(self, x: Element, y: Element) -> Fraction:
        """Invariant form with (h, h') = h.h' and (x_D, x_-D) = 1."""
        self.check(x)
        self.check(y)
        value = rational_dot(x.cartan, y.cartan)
        other = y.root_terms()
        for D, c in x.roots:
            value += c * other.get(-D, Fraction(0))
        return value

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name}, dim={self.dimension})"


@lru_cache(maxsize=16)
def build_algebra(lattice: PicardLattice) -> LieAlgebra:
    """E_n on X_n for 1 <= n <= 8."""
    if lattice.n < 1:
        raise DomainError("The algebra needs at least one blowup")
    algebra = LieAlgebra(build_root_system(lattice), build_cocycle(lattice))
    logger.info(f"Built {algebra.name}: dimension {algebra.dimension}")
    return algebra


def subalgebra(algebra: LieAlgebra, roots: Iterable[DivisorClass], name: str) -> LieAlgebra:
    """Full Cartan plus the given closed set of roots."""
    chosen = list(roots)
    missing = [D for D in chosen if D not in algebra.root_set]
    if missing:
        raise DomainError(f"{missing[0].label()} is not a root of {algebra.name}")
    return LieAlgebra(algebra.system.subsystem(chosen), algebra.cocycle, name=name)
