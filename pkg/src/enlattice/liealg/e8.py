"""E_8 assembled from D_8 and a half-spin module.

With H a degree class of eight disjoint lines, LD_8 is the Cartan plus the
112 roots with D.H even, and S+ is the 128 lines with l.H even, on which the
even roots act minusculely. The bracket on LD_8 + S+ is

    [a + u, b + v] = [a, b] + gamma(u, v) + (a.v - b.u)

where gamma is the moment map of the invariant pairing S+ x S+ -> O(-2K).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from enlattice.census import enumerate_lines
from enlattice.exceptions import DomainError
from enlattice.picard import DivisorClass, make_lattice

from .algebra import Element, LieAlgebra, build_algebra, subalgebra
from .forms import InvariantPairing, MomentMap
from .modules import ModuleVector, WeightModule, minuscule_module

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpinElement:
    """An element a + u of LD_8 + S+."""

    even: Element
    spin: ModuleVector

    def __add__(self, other: "SpinElement") -> "SpinElement":
        return SpinElement(self.even + other.even, self.spin + other.spin)

    def __sub__(self, other: "SpinElement") -> "SpinElement":
        return SpinElement(self.even - other.even, self.spin - other.spin)

    def __neg__(self) -> "SpinElement":
        return SpinElement(-self.even, -self.spin)

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.spin.is_zero()

    def __str__(self) -> str:
        spin = " + ".join(f"{c}*v[{w.label()}]" for w, c in self.spin.terms)
        return f"{self.even} | {spin or '0'}"


class E8ViaD8:
    """The D_8 model of E_8 for a chosen degree class."""

    def __init__(self, algebra: LieAlgebra, degree_class: DivisorClass | None = None):
        lattice = algebra.lattice
        if lattice.n != 8:
            raise DomainError(f"The D_8 model needs X_8, got X_{lattice.n}")
        H = degree_class if degree_class is not None else lattice.H
        if not lattice.contains(H):
            raise DomainError(f"{H.label()} is not a class on X_8")
        self.full = algebra
        self.degree_class = H
        even_roots = [D for D in algebra.roots if D.dot(H) % 2 == 0]
        self.even = subalgebra(algebra, even_roots, "LD_8")
        even_lines = [l for l in enumerate_lines(lattice) if l.dot(H) % 2 == 0]
        if not even_lines:
            raise DomainError(f"No line has even degree against {H.label()}")
        self.spin: WeightModule = minuscule_module(self.even, "S+", even_lines, even_lines[0])
        self.pairing = InvariantPairing(self.spin, self.spin, -(lattice.K * 2))
        self.gamma = MomentMap(self.pairing)
        logger.info(
            f"D_8 model: {len(even_roots)} even roots, {len(even_lines)} spin weights, "
            f"dimension {self.dimension}"
        )

    @property
    def dimension(self) -> int:
        return self.even.dimension + self.spin.rank

    def zero_spin(self) -> ModuleVector:
        return ModuleVector(self.spin.name)

    def element(self, even: Element | None = None, spin: ModuleVector | None = None) -> SpinElement:
        return SpinElement(
            even if even is not None else Element.zero(8),
            spin if spin is not None else self.zero_spin(),
        )

    def basis(self) -> list[tuple[DivisorClass | None, SpinElement]]:
        """Basis vectors with their root, None for the Cartan part."""
        items: list[tuple[DivisorClass | None, SpinElement]] = [
            (None, self.element(even=h)) for h in self.even.cartan_basis()
        ]
        items.extend((D, self.element(even=Element.root_vector(D))) for D in self.even.roots)
        K = self.full.lattice.K
        items.extend(
            (w + K, self.element(spin=self.spin.basis_vector(w))) for w in self.spin.weights
        )
        return items

    @cached_property
    def root_set(self) -> frozenset[DivisorClass]:
        """Roots of the assembled algebra: even roots and spin weights shifted by K."""
        K = self.full.lattice.K
        return frozenset(self.even.roots) | frozenset(w + K for w in self.spin.weights)

    def spin_products(self, u: ModuleVector, v: ModuleVector) -> tuple[Fraction, Element]:
        """Scalar pairing into O(-2K) and the alternating product into LD_8."""
        return self.pairing(u, v), self.gamma(u, v)

    def bracket(self, x: SpinElement, y: SpinElement) -> SpinElement:
        even = self.even.bracket(x.even, y.even) + self.gamma(x.spin, y.spin)
        spin = self.spin.act(x.even, y.spin) - self.spin.act(y.even, x.spin)
        return SpinElement(even, spin)


def e8_via_d8(degree_class: DivisorClass | None = None) -> E8ViaD8:
    return E8ViaD8(build_algebra(make_lattice(8)), degree_class)


def e8_spin_products(model: E8ViaD8, u: ModuleVector, v: ModuleVector) -> tuple[Fraction, Element]:
    return model.spin_products(u, v)


def e8_bracket_via_d8(model: E8ViaD8, x: SpinElement, y: SpinElement) -> SpinElement:
    return model.bracket(x, y)
