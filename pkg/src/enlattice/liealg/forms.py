"""Invariant forms and equivariant products on the weight modules.

All forms are built from one device: for minuscule modules M1, M2 with bases
B1, B2 and a class T orthogonal to every root,

    p(v_a, v_b) = eps(a - B1, T - B1 - B2)   if a + b = T, else 0

is invariant. It is symmetric on M x M exactly when eps(k, k) = 1 for
k = T - 2B. The moment map of such a pairing, the Killing form and the
products c_n then give the cubic and quartic invariants.
"""

import logging
from collections import defaultdict
from collections.abc import Iterable, Iterator, Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

import sympy

from enlattice.exceptions import DomainError
from enlattice.picard import DivisorClass

from .algebra import Element, LieAlgebra, normalize_terms
from .modules import ModuleKind, ModuleVector, WeightModule, rulings_module

logger = logging.getLogger(__name__)


class InvariantPairing:
    """Invariant bilinear pairing between two minuscule modules."""

    def __init__(self, left: WeightModule, right: WeightModule, target: DivisorClass):
        for module in (left, right):
            if module.kind != ModuleKind.MINUSCULE:
                raise DomainError(f"{module.name} is not a minuscule module")
        if left.algebra is not right.algebra:
            raise DomainError(f"{left.name} and {right.name} are modules of different algebras")
        assert left.algebra is not None and left.base is not None and right.base is not None
        self.algebra: LieAlgebra = left.algebra
        moving = [A for A in self.algebra.roots if A.dot(target)]
        if moving:
            raise DomainError(f"Target {target.label()} is not fixed: it pairs with {moving[0].label()}")
        self.left = left
        self.right = right
        self.target = target
        self.kappa = target - left.base - right.base
        if self.kappa.dot(self.algebra.lattice.K):
            raise DomainError(f"Weights of {left.name} and {right.name} never sum to {target.label()}")

    def on_weights(self, a: DivisorClass, b: DivisorClass) -> int:
        if a + b != self.target:
            return 0
        assert self.left.base is not None
        return self.algebra.cocycle.sign(a - self.left.base, self.kappa)

    def __call__(self, u: ModuleVector, v: ModuleVector) -> Fraction:
        self.left.check(u)
        self.right.check(v)
        right_terms = dict(v.terms)
        value = Fraction(0)
        for a, c in u.terms:
            partner = self.target - a
            d = right_terms.get(partner)
            if d:
                value += self.on_weights(a, partner) * c * d
        return value

    def partner(self, a: DivisorClass) -> DivisorClass:
        return self.target - a

    def gram(self) -> list[list[int]]:
        return [[self.on_weights(a, b) for b in self.right.weights] for a in self.left.weights]

    def determinant(self) -> int:
        if len(self.left.weights) != len(self.right.weights):
            raise DomainError("Gram matrix is not square")
        return int(sympy.Matrix(self.gram()).det())

    def is_perfect_matching(self) -> bool:
        """Exactly one nonzero entry, of absolute value 1, in every row and column."""
        gram = self.gram()
        rows_ok = all(sum(1 for x in row if x) == 1 for row in gram)
        cols_ok = all(sum(1 for row in gram if row[j]) == 1 for j in range(len(self.right.weights)))
        return rows_ok and cols_ok and all(abs(x) <= 1 for row in gram for x in row)

    def symmetry(self) -> int:
        """+1 if symmetric, -1 if alternating; only for a module paired with itself."""
        if self.left is not self.right:
            raise DomainError("Symmetry is defined for a module paired with itself")
        return self.algebra.cocycle.sign(self.kappa, self.kappa)


class MomentMap:
    """The map mu: M x M -> g with kappa(X, mu(u, v)) = p(X.u, v)."""

    def __init__(self, pairing: InvariantPairing):
        if pairing.left is not pairing.right:
            raise DomainError("The moment map needs a pairing of a module with itself")
        self.pairing = pairing
        self.module = pairing.left
        self.algebra = pairing.algebra
        self._cache: dict[tuple[DivisorClass, DivisorClass], Element] = {}

    def on_weights(self, a: DivisorClass, b: DivisorClass) -> Element:
        key = (a, b)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        algebra = self.algebra
        lattice = algebra.lattice
        assert self.module.base is not None
        terms: dict[DivisorClass, Fraction] = {}
        alpha = self.pairing.target - a - b
        if alpha in algebra.root_set and a.dot(alpha) == 1:
            sign = algebra.cocycle.sign(alpha, a - self.module.base)
            value = sign * self.pairing.on_weights(a + alpha, b)
            if value:
                terms[-alpha] = Fraction(value)
        cartan: tuple[Fraction, ...] = (Fraction(0),) * (lattice.n + 1)
        if a + b == self.pairing.target:
            scalar = self.pairing.on_weights(a, b)
            cartan = tuple(scalar * x for x in lattice.project_to_kperp(a))
        result = Element(cartan, normalize_terms(terms))
        self._cache[key] = result
        return result

    def __call__(self, u: ModuleVector, v: ModuleVector) -> Element:
        self.module.check(u)
        self.module.check(v)
        total = Element.zero(self.algebra.n)
        for a, c in u.terms:
            for b, d in v.terms:
                piece = self.on_weights(a, b)
                if not piece.is_zero():
                    total = total + piece.scale(c * d)
        return total


def moment_map(pairing: InvariantPairing) -> MomentMap:
    return MomentMap(pairing)


def invariant_pairing(left: WeightModule, right: WeightModule, target: DivisorClass) -> InvariantPairing:
    return _cached_pairing(left, right, target)


@lru_cache(maxsize=32)
def _cached_pairing(left: WeightModule, right: WeightModule, target: DivisorClass) -> InvariantPairing:
    return InvariantPairing(left, right, target)


@lru_cache(maxsize=16)
def _cached_moment(pairing: InvariantPairing) -> MomentMap:
    return MomentMap(pairing)


def _require(module: WeightModule, name: str) -> LieAlgebra:
    if module.name != name or module.kind != ModuleKind.MINUSCULE or module.algebra is None:
        raise DomainError(f"This form lives on {name}, not on {module.name}")
    return module.algebra


def q5_pairing(rulings: WeightModule) -> InvariantPairing:
    algebra = _require(rulings, "R_5")
    return invariant_pairing(rulings, rulings, -algebra.lattice.K)


def q7_pairing(lines: WeightModule) -> InvariantPairing:
    algebra = _require(lines, "L_7")
    return invariant_pairing(lines, lines, -algebra.lattice.K)


def form_q5(rulings: WeightModule, u: ModuleVector, v: ModuleVector) -> Fraction:
    """Quadratic form on R_5, pairing R with -K-R."""
    return q5_pairing(rulings)(u, v)


def form_q7(lines: WeightModule, u: ModuleVector, v: ModuleVector) -> Fraction:
    """Alternating form on L_7, pairing each line with its bitangent partner."""
    return q7_pairing(lines)(u, v)


def killing_form(algebra: LieAlgebra, x: Element, y: Element) -> Fraction:
    return algebra.killing_form(x, y)


def _cn_sign(lines: WeightModule, a: DivisorClass, b: DivisorClass) -> int:
    assert lines.algebra is not None and lines.base is not None
    base = lines.base
    a_shift = a - base
    b_shift = b - base
    parity = base.dot(b_shift) % 2
    return lines.algebra.cocycle.sign(a_shift, b_shift) * (-1 if parity else 1)


def product_cn(lines: WeightModule, u: ModuleVector, v: ModuleVector) -> ModuleVector:
    """The symmetric equivariant product L_n x L_n -> R_n.

    For n <= 6 two lines meeting once go to their sum. On X_7 the product is
    the moment map of the bitangent form, read in R_7 = ad - K, so meeting
    pairs land on the ruling l + l' and bitangent pairs on the zero block.
    """
    algebra = lines.algebra
    if algebra is None or lines.kind != ModuleKind.MINUSCULE or lines.name != f"L_{algebra.n}":
        raise DomainError(f"{lines.name} is not a lines module")
    rulings = rulings_module(algebra)
    if algebra.n == 7:
        mu = _cached_moment(q7_pairing(lines))
        return rulings.from_element(mu(u, v))
    if algebra.n > 7 or algebra.n < 2:
        raise DomainError(f"c_n is constructed for 2 <= n <= 7, not n={algebra.n}")
    lines.check(u)
    lines.check(v)
    terms: dict[DivisorClass, Fraction] = defaultdict(Fraction)
    for a, c in u.terms:
        for b, d in v.terms:
            if a.dot(b) == 1:
                terms[a + b] += _cn_sign(lines, a, b) * c * d
    return ModuleVector(rulings.name, normalize_terms(terms))


def _c6_pairing(lines: WeightModule) -> InvariantPairing:
    algebra = _require(lines, "L_6")
    return invariant_pairing(rulings_module(algebra), lines, -algebra.lattice.K)


def form_c6(lines: WeightModule, u: ModuleVector, v: ModuleVector, w: ModuleVector) -> Fraction:
    """Cubic form on L_6: the R_6 x L_6 contraction of c_6(u, v) with w."""
    return _c6_pairing(lines)(product_cn(lines, u, v), w)


def c6_on_weights(lines: WeightModule, a: DivisorClass, b: DivisorClass, c: DivisorClass) -> int:
    pairing = _c6_pairing(lines)
    if a.dot(b) != 1:
        return 0
    return _cn_sign(lines, a, b) * pairing.on_weights(a + b, c)


def f7_on_weights(
    lines: WeightModule, a: DivisorClass, b: DivisorClass, c: DivisorClass, d: DivisorClass
) -> Fraction:
    mu = _cached_moment(q7_pairing(lines))
    algebra = mu.algebra
    return (
        algebra.killing_form(mu.on_weights(a, b), mu.on_weights(c, d))
        + algebra.killing_form(mu.on_weights(a, c), mu.on_weights(b, d))
        + algebra.killing_form(mu.on_weights(a, d), mu.on_weights(b, c))
    )


def form_f7(
    lines: WeightModule, u: ModuleVector, v: ModuleVector, w: ModuleVector, z: ModuleVector
) -> Fraction:
    """Quartic invariant on L_7, the symmetrized square of the moment map."""
    mu = _cached_moment(q7_pairing(lines))
    kappa = mu.algebra.killing_form
    return (
        kappa(mu(u, v), mu(w, z)) + kappa(mu(u, w), mu(v, z)) + kappa(mu(u, z), mu(v, w))
    )


def triangles(lines: Sequence[DivisorClass], total: DivisorClass) -> Iterator[tuple[DivisorClass, ...]]:
    """Unordered triples of distinct classes summing to total."""
    index = set(lines)
    for a, b in combinations(sorted(lines), 2):
        c = total - a - b
        if c in index and b < c:
            yield (a, b, c)


def quadruples(
    classes: Sequence[DivisorClass], total: DivisorClass, distinct: bool = True
) -> list[tuple[DivisorClass, ...]]:
    """Multisets of four classes summing to total, found through pair sums."""
    by_sum: dict[DivisorClass, list[tuple[DivisorClass, DivisorClass]]] = defaultdict(list)
    ordered = sorted(classes)
    pairs: Iterable[tuple[DivisorClass, DivisorClass]] = (
        combinations(ordered, 2) if distinct else combinations_with_replacement(ordered, 2)
    )
    for a, b in pairs:
        by_sum[a + b].append((a, b))
    found: set[tuple[DivisorClass, ...]] = set()
    for s, left in by_sum.items():
        for a, b in left:
            for c, d in by_sum.get(total - s, []):
                quad = tuple(sorted((a, b, c, d)))
                if distinct and len(set(quad)) < 4:
                    continue
                found.add(quad)
    return sorted(found)


def c6_support(lines: WeightModule) -> list[tuple[DivisorClass, ...]]:
    """Weight triples on which the cubic form is nonzero."""
    K = _require(lines, "L_6").lattice.K
    return [t for t in triangles(lines.weights, -K) if c6_on_weights(lines, *t)]


def f7_support(lines: WeightModule, distinct: bool = True) -> list[tuple[DivisorClass, ...]]:
    """Weight quadruples on which the quartic form is nonzero."""
    q7_pairing(lines)
    assert lines.algebra is not None
    target = -(lines.algebra.lattice.K * 2)
    found = [q for q in quadruples(lines.weights, target, distinct) if f7_on_weights(lines, *q)]
    logger.debug(f"Quartic support on {lines.name}: {len(found)} quadruples (distinct={distinct})")
    return found

