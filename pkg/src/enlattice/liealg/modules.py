"""Weight modules of E_n: L_n, R_n and their building blocks.

Three kinds exist:

* minuscule: one basis vector per weight; x_A sends v_w to
  eps(A, w - base) v_{w+A} when w.A = 1 and kills it otherwise. The base is a
  fixed class with the same K-degree as the weights.
* adjoint: the adjoint module twisted by a class, e.g. R_7 = roots - K plus a
  zero-weight block of rank 7. The action is the bracket.
* weights: bookkeeping only, a multiset of classes with no action.
"""

import logging
from collections import Counter, defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache

from enlattice.census import enumerate_lines, enumerate_rulings
from enlattice.exceptions import DomainError
from enlattice.picard import DivisorClass, rational_dot

from .algebra import Element, LieAlgebra, Terms, normalize_terms

logger = logging.getLogger(__name__)


class ModuleKind(str, Enum):
    MINUSCULE = "minuscule"
    ADJOINT = "adjoint"
    WEIGHTS = "weights"


@dataclass(frozen=True)
class ModuleVector:
    """Coefficients on weight vectors, plus a zero-block vector for adjoint modules."""

    module: str
    terms: Terms = ()
    zero_block: tuple[Fraction, ...] | None = None

    def coefficient(self, weight: DivisorClass) -> Fraction:
        return dict(self.terms).get(weight, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms and not (self.zero_block and any(self.zero_block))

    def _combine(self, other: "ModuleVector", sign: int) -> "ModuleVector":
        if other.module != self.module:
            raise DomainError(f"Cannot combine vectors of {self.module} and {other.module}")
        terms: dict[DivisorClass, Fraction] = defaultdict(Fraction, self.terms)
        for w, c in other.terms:
            terms[w] += sign * c
        block = self.zero_block
        if other.zero_block is not None:
            if block is None:
                block = tuple(sign * x for x in other.zero_block)
            else:
                block = tuple(a + sign * b for a, b in zip(block, other.zero_block, strict=True))
        return ModuleVector(self.module, normalize_terms(terms), block)

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        return self._combine(other, 1)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self._combine(other, -1)

    def __neg__(self) -> "ModuleVector":
        return self.scale(-1)

    def scale(self, c: Fraction | int) -> "ModuleVector":
        c = Fraction(c)
        block = None if self.zero_block is None else tuple(c * x for x in self.zero_block)
        terms = tuple((w, c * v) for w, v in self.terms) if c else ()
        return ModuleVector(self.module, terms, block)

    def __rmul__(self, c: Fraction | int) -> "ModuleVector":
        return self.scale(c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.module == other.module and (self - other).is_zero()

    def __hash__(self) -> int:
        return hash((self.module, self.terms))


@dataclass(frozen=True, eq=False)
class WeightModule:
    """Named multiset of weights, optionally with an algebra action."""

    name: str
    weights: tuple[DivisorClass, ...]
    cartan_mult: int = 0
    kind: ModuleKind = ModuleKind.WEIGHTS
    base: DivisorClass | None = None
    twist: DivisorClass | None = None
    algebra: LieAlgebra | None = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return len(self.weights) + self.cartan_mult

    @cached_property
    def weight_set(self) -> frozenset[DivisorClass]:
        return frozenset(self.weights)

    def weight_multiset(self) -> Counter[DivisorClass]:
        """All weights with multiplicity; the zero-weight block sits at the twist."""
        counts = Counter(self.weights)
        if self.cartan_mult:
            if self.twist is None:
                raise DomainError(f"{self.name} has a zero-weight block but no twist class")
            counts[self.twist] += self.cartan_mult
        return counts

    def _require_action(self) -> LieAlgebra:
        if self.kind == ModuleKind.WEIGHTS or self.algebra is None:
            raise DomainError(f"{self.name} carries no algebra action")
        return self.algebra

    def vector(
        self, terms: dict[DivisorClass, Fraction | int], zero_block: Sequence[Fraction | int] | None = None
    ) -> ModuleVector:
        unknown = [w for w in terms if w not in self.weight_set]
        if unknown:
            raise DomainError(f"{unknown[0].label()} is not a weight of {self.name}")
        block = None
        if zero_block is not None:
            if self.kind != ModuleKind.ADJOINT:
                raise DomainError(f"{self.name} has no zero-weight block")
            block = tuple(Fraction(x) for x in zero_block)
        return ModuleVector(
            self.name, normalize_terms({w: Fraction(c) for w, c in terms.items()}), block
        )

    def basis_vector(self, weight: DivisorClass) -> ModuleVector:
        return self.vector({weight: 1})

    def basis(self) -> list[ModuleVector]:
        vectors = [self.basis_vector(w) for w in self.weights]
        if self.kind == ModuleKind.ADJOINT:
            algebra = self._require_action()
            vectors.extend(
                ModuleVector(self.name, (), h.cartan) for h in algebra.cartan_basis()
            )
        return vectors

    def check(self, v: ModuleVector) -> None:
        if v.module != self.name:
            raise DomainError(f"Vector of {v.module} used with module {self.name}")
        for w, _ in v.terms:
            if w not in self.weight_set:
                raise DomainError(f"{w.label()} is not a weight of {self.name}")

    def to_element(self, v: ModuleVector) -> Element:
        """Adjoint modules only: the algebra element a vector stands for."""
        algebra = self._require_action()
        assert self.twist is not None
        block = v.zero_block or (Fraction(0),) * (algebra.n + 1)
        return Element(block, normalize_terms({w - self.twist: c for w, c in v.terms}))

    def from_element(self, x: Element) -> ModuleVector:
        assert self.twist is not None
        return ModuleVector(
            self.name, normalize_terms({D + self.twist: c for D, c in x.roots}), x.cartan
        )

    def act(self, x: Element, v: ModuleVector) -> ModuleVector:
        algebra = self._require_action()
        algebra.check(x)
        self.check(v)
        if self.kind == ModuleKind.ADJOINT:
            return self.from_element(algebra._bracket(x, self.to_element(v)))
        assert self.base is not None
        cocycle = algebra.cocycle
        terms: dict[DivisorClass, Fraction] = defaultdict(Fraction)
        for w, c in v.terms:
            if x.has_cartan():
                weight = rational_dot(x.cartan, w.coeffs)
                if weight:
                    terms[w] += weight * c
            shifted = w - self.base
            for A, a in x.roots:
                if w.dot(A) == 1:
                    terms[w + A] += cocycle.sign(A, shifted) * a * c
        return ModuleVector(self.name, normalize_terms(terms))

    def __repr__(self) -> str:
        return f"WeightModule({self.name}, {self.kind.value}, rank={self.rank})"


def act(x: Element, module: WeightModule, v: ModuleVector) -> ModuleVector:
    """Action of an algebra element on a module vector."""
    return module.act(x, v)


def minuscule_module(
    algebra: LieAlgebra, name: str, weights: Iterable[DivisorClass], base: DivisorClass
) -> WeightModule:
    """Module with one vector per weight; every root must pair with every weight in -1..1."""
    chosen = tuple(sorted(set(weights)))
    K = algebra.lattice.K
    for w in chosen:
        if w.dot(K) != base.dot(K):
            raise DomainError(f"{w.label()} and base {base.label()} differ in K-degree")
        for A in algebra.roots:
            if abs(w.dot(A)) > 1:
                raise DomainError(
                    f"{name} is not minuscule: weight {w.label()} pairs to {w.dot(A)} with {A.label()}"
                )
    module = WeightModule(name, chosen, 0, ModuleKind.MINUSCULE, base, None, algebra)
    logger.debug(f"Minuscule module {name} of rank {module.rank} over {algebra.name}")
    return module


def adjoint_module(algebra: LieAlgebra, name: str | None = None, twist: DivisorClass | None = None) -> WeightModule:
    """The adjoint module, weights shifted by twist (default zero)."""
    shift = twist if twist is not None else algebra.lattice.K * 0
    weights = tuple(sorted(D + shift for D in algebra.roots))
    return WeightModule(
        name or f"ad({algebra.name})",
        weights,
        algebra.cartan_rank,
        ModuleKind.ADJOINT,
        None,
        shift,
        algebra,
    )


def weights_module(name: str, weights: Iterable[DivisorClass], cartan_mult: int = 0, twist: DivisorClass | None = None) -> WeightModule:
    return WeightModule(name, tuple(sorted(weights)), cartan_mult, ModuleKind.WEIGHTS, None, twist)


@lru_cache(maxsize=16)
def lines_module(algebra: LieAlgebra) -> WeightModule:
    """L_n: minuscule on the lines for n <= 7, the adjoint twisted by -K on X_8."""
    lattice = algebra.lattice
    if lattice.n == 8:
        return adjoint_module(algebra, "L_8", -lattice.K)
    return minuscule_module(algebra, f"L_{lattice.n}", enumerate_lines(lattice), lattice.L(1))


@lru_cache(maxsize=16)
def rulings_module(algebra: LieAlgebra) -> WeightModule:
    """R_n: minuscule on the rulings for n <= 6, the adjoint twisted by -K on X_7."""
    lattice = algebra.lattice
    if lattice.n == 7:
        return adjoint_module(algebra, "R_7", -lattice.K)
    if lattice.n > 7:
        raise DomainError("R_8 is not constructed")
    return minuscule_module(
        algebra, f"R_{lattice.n}", enumerate_rulings(lattice), lattice.L(1) * 2
    )
