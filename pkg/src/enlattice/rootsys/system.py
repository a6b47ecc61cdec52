"""Root systems on K-perp: simple roots, reflections, orbits and Weyl groups."""

import logging
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import sympy
from sympy.combinatorics import Permutation, PermutationGroup

from enlattice.census import enumerate_roots
from enlattice.constants import DEFAULT_ORBIT_CAP, MAX_ALGEBRA_RANK, MAX_WEYL_ORDER_RANK
from enlattice.exceptions import BudgetExceededError, DomainError
from enlattice.picard import DivisorClass, PicardLattice

from .dynkin import CartanMatrix, dynkin_type

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootSystem:
    """Roots of a lattice (or a subsystem of them) with a chosen base."""

    lattice: PicardLattice
    roots: tuple[DivisorClass, ...]
    simple_roots: tuple[DivisorClass, ...]

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def root_set(self) -> frozenset[DivisorClass]:
        return frozenset(self.roots)

    @cached_property
    def cartan(self) -> CartanMatrix:
        return CartanMatrix.from_simple_roots(self.simple_roots)

    @property
    def type(self) -> str:
        return dynkin_type(self.cartan)

    def is_root(self, D: DivisorClass) -> bool:
        return D in self.root_set

    def subsystem(self, roots: Iterable[DivisorClass]) -> "RootSystem":
        chosen = tuple(sorted(set(roots)))
        return RootSystem(self.lattice, chosen, tuple(simple_system(chosen)))


def standard_simple_roots(lattice: PicardLattice) -> list[DivisorClass]:
    """H-L1-L2-L3 and L_i - L_{i+1}, as far as they exist on X_n."""
    n = lattice.n
    simple: list[DivisorClass] = []
    if n >= 3:
        simple.append(lattice.H - lattice.L(1) - lattice.L(2) - lattice.L(3))
    simple.extend(lattice.L(i) - lattice.L(i + 1) for i in range(1, n))
    return simple


@lru_cache(maxsize=16)
def build_root_system(lattice: PicardLattice) -> RootSystem:
    """The E_n root system of X_n with the standard blowup base."""
    if lattice.n > MAX_ALGEBRA_RANK:
        raise DomainError(f"E_n root systems exist for n <= {MAX_ALGEBRA_RANK}, got n={lattice.n}")
    if lattice.n == 0:
        return RootSystem(lattice, (), ())
    roots = tuple(enumerate_roots(lattice))
    system = RootSystem(lattice, roots, tuple(standard_simple_roots(lattice)))
    logger.debug(f"X_{lattice.n}: {len(roots)} roots, type {system.type}")
    return system


def _height_key(D: DivisorClass) -> int:
    # Root coefficients stay below 8 in absolute value for n <= 8, so base 16
    # digits give an injective functional that is nonzero on every root.
    return sum(c * 16**i for i, c in enumerate(D.coeffs))


def simple_system(roots: Sequence[DivisorClass]) -> list[DivisorClass]:
    """Simple roots of a root subsystem, positive for a fixed generic functional."""
    positive = sorted((r for r in roots if _height_key(r) > 0), key=_height_key)
    positive_set = set(positive)
    simple = [
        r
        for r in positive
        if not any((r - s) in positive_set for s in positive if _height_key(s) < _height_key(r))
    ]
    return sorted(simple)


def reflect(D: DivisorClass, root: DivisorClass) -> DivisorClass:
    """Reflection in a norm -2 class: D + (D.root) root."""
    if root.dot(root) != -2:
        raise DomainError(f"{root.label()} has self-intersection {root.dot(root)}, not -2")
    return D + root * D.dot(root)


def apply_word(D: DivisorClass, word: Sequence[DivisorClass]) -> DivisorClass:
    """Apply reflections in order, first element first."""
    for root in word:
        D = reflect(D, root)
    return D


def weyl_orbit(
    seed: DivisorClass, system: RootSystem, cap: int = DEFAULT_ORBIT_CAP
) -> list[DivisorClass]:
    """Closure of a class under the simple reflections, sorted."""
    seen = {seed}
    frontier = deque([seed])
    while frontier:
        D = frontier.popleft()
        for s in system.simple_roots:
            image = reflect(D, s)
            if image not in seen:
                seen.add(image)
                if len(seen) > cap:
                    raise BudgetExceededError(
                        f"Weyl orbit of {seed.label()} exceeds cap {cap}; raise budget.orbit_cap"
                    )
                frontier.append(image)
    return sorted(seen)


def weyl_word(
    source: DivisorClass, target: DivisorClass, system: RootSystem, cap: int = DEFAULT_ORBIT_CAP
) -> list[DivisorClass]:
    """Shortest sequence of simple reflections taking source to target."""
    parent: dict[DivisorClass, tuple[DivisorClass, DivisorClass] | None] = {source: None}
    frontier = deque([source])
    while frontier:
        D = frontier.popleft()
        if D == target:
            word: list[DivisorClass] = []
            step = parent[D]
            while step is not None:
                previous, root = step
                word.append(root)
                step = parent[previous]
            return word[::-1]
        for s in system.simple_roots:
            image = reflect(D, s)
            if image not in parent:
                parent[image] = (D, s)
                if len(parent) > cap:
                    raise BudgetExceededError(f"Weyl word search exceeded cap {cap}")
                frontier.append(image)
    raise DomainError(f"{target.label()} is not in the Weyl orbit of {source.label()}")


def simple_coordinates(D: DivisorClass, system: RootSystem) -> list[Fraction]:
    """Coefficients of D in the simple roots, exactly."""
    if not system.simple_roots:
        if D.is_zero():
            return []
        raise DomainError(f"{D.label()} is not in the span of an empty base")
    basis = sympy.Matrix([list(s.coeffs) for s in system.simple_roots]).T
    try:
        solution, params = basis.gauss_jordan_solve(sympy.Matrix(list(D.coeffs)))
    except ValueError as e:
        raise DomainError(f"{D.label()} is not in the span of the simple roots") from e
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in solution]


def weyl_group_order(system: RootSystem) -> int:
    """Order of the group generated by simple reflections, acting on the roots."""
    n = system.lattice.n
    if n > MAX_WEYL_ORDER_RANK:
        raise DomainError(
            f"Weyl group generation is supported for n <= {MAX_WEYL_ORDER_RANK}; "
            f"use weyl_orbit for n={n}"
        )
    if not system.roots:
        return 1
    index = {r: i for i, r in enumerate(system.roots)}
    generators = [
        Permutation([index[reflect(r, s)] for r in system.roots]) for s in system.simple_roots
    ]
    order = int(PermutationGroup(generators).order())
    logger.info(f"|W| = {order} for X_{n}")
    return order
