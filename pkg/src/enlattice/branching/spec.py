"""Reduction data and multiset decompositions."""

import logging
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum

from enlattice.census import is_line, is_root, is_ruling
from enlattice.exceptions import DomainError
from enlattice.liealg import WeightModule, weights_module
from enlattice.picard import DivisorClass, PicardLattice, sum_classes
from enlattice.report import IdentityRecord, Scope

logger = logging.getLogger(__name__)


class SpecKind(str, Enum):
    FIXED_LINE = "fixed-line"
    FIXED_RULING = "fixed-ruling"
    RULING_LINE_SECTION = "ruling-line-section"
    RULING_RULING_SECTION = "ruling-ruling-section"
    PARITY = "parity"
    A1_PAIR = "a1-pair"


@dataclass(frozen=True)
class SubalgebraSpec:
    """Geometric datum singling out a subalgebra of E_n."""

    kind: SpecKind
    lattice: PicardLattice
    classes: tuple[DivisorClass, ...]

    def __post_init__(self) -> None:
        for D in self.classes:
            if not self.lattice.contains(D):
                raise DomainError(f"{D.label()} is not a class on X_{self.lattice.n}")
        validator = getattr(self, f"_validate_{self.kind.name.lower()}")
        validator()

    def _need(self, ok: bool, message: str) -> None:
        if not ok:
            raise DomainError(f"Invalid {self.kind.value} spec: {message}")

    def _validate_fixed_line(self) -> None:
        (L,) = self.classes
        self._need(is_line(L, self.lattice), f"{L.label()} is not a line (L.L=-1, L.K=-1)")

    def _validate_fixed_ruling(self) -> None:
        (R,) = self.classes
        self._need(is_ruling(R, self.lattice), f"{R.label()} is not a ruling (R.R=0, R.K=-2)")

    def _validate_ruling_line_section(self) -> None:
        R, S = self.classes
        self._validate_ruling_only(R)
        self._need(is_line(S, self.lattice), f"{S.label()} is not a line")
        self._need(S.dot(R) == 1, f"{S.label()} meets {R.label()} {S.dot(R)} times, not once")

    def _validate_ruling_ruling_section(self) -> None:
        R, T = self.classes
        self._validate_ruling_only(R)
        self._need(is_root(T, self.lattice), f"{T.label()} is not a root")
        self._need(T.dot(R) == 1, f"{T.label()}.{R.label()} = {T.dot(R)}, not 1")

    def _validate_ruling_only(self, R: DivisorClass) -> None:
        self._need(is_ruling(R, self.lattice), f"{R.label()} is not a ruling")

    def _validate_parity(self) -> None:
        self._need(self.lattice.n == 8, "parity reduction lives on X_8")
        (H,) = self.classes
        self._need(H.dot(H) == 1 and H.dot(self.lattice.K) == -3, f"{H.label()} is not a degree class")

    def _validate_a1_pair(self) -> None:
        L1, L2 = self.classes
        self._need(self.lattice.n == 8, "the A_1 pair lives on X_8")
        self._need(is_line(L1, self.lattice) and is_line(L2, self.lattice), "both classes must be lines")
        self._need(L1.dot(L2) == 0, f"{L1.label()} and {L2.label()} meet")

    @classmethod
    def fixed_line(cls, lattice: PicardLattice, L: DivisorClass) -> "SubalgebraSpec":
        return cls(SpecKind.FIXED_LINE, lattice, (L,))

    @classmethod
    def fixed_ruling(cls, lattice: PicardLattice, R: DivisorClass) -> "SubalgebraSpec":
        return cls(SpecKind.FIXED_RULING, lattice, (R,))

    @classmethod
    def ruling_line_section(cls, lattice: PicardLattice, R: DivisorClass, S: DivisorClass) -> "SubalgebraSpec":
        return cls(SpecKind.RULING_LINE_SECTION, lattice, (R, S))

    @classmethod
    def ruling_ruling_section(cls, lattice: PicardLattice, R: DivisorClass, T: DivisorClass) -> "SubalgebraSpec":
        return cls(SpecKind.RULING_RULING_SECTION, lattice, (R, T))

    @classmethod
    def parity(cls, lattice: PicardLattice, H: DivisorClass | None = None) -> "SubalgebraSpec":
        return cls(SpecKind.PARITY, lattice, (H if H is not None else lattice.H,))

    @classmethod
    def parity_from_lines(cls, lattice: PicardLattice, lines: Sequence[DivisorClass]) -> "SubalgebraSpec":
        """Degree class (-K + sum E_i) / 3 of eight disjoint lines."""
        if lattice.n != 8 or len(lines) != 8:
            raise DomainError("Eight disjoint lines on X_8 are required")
        for i, E in enumerate(lines):
            if not is_line(E, lattice):
                raise DomainError(f"{E.label()} is not a line")
            for F in lines[i + 1 :]:
                if E.dot(F) != 0:
                    raise DomainError(f"Lines {E.label()} and {F.label()} are not disjoint")
        total = sum_classes(lines, 8) - lattice.K
        if any(c % 3 for c in total.coeffs):
            raise DomainError("(-K + sum E_i) / 3 is not integral")
        return cls.parity(lattice, DivisorClass(tuple(c // 3 for c in total.coeffs)))

    @classmethod
    def a1_pair(cls, lattice: PicardLattice, L1: DivisorClass, L2: DivisorClass) -> "SubalgebraSpec":
        return cls(SpecKind.A1_PAIR, lattice, (L1, L2))

    def describe(self) -> str:
        return f"{self.kind.value}(" + ", ".join(D.label() for D in self.classes) + ")"


@dataclass(frozen=True)
class Component:
    """A summand of a decomposition; weights are shifted by twist before comparison."""

    label: str
    module: WeightModule
    twist: DivisorClass | None = None

    def weights(self) -> Counter[DivisorClass]:
        counts = self.module.weight_multiset()
        if self.twist is None or self.twist.is_zero():
            return counts
        return Counter({w + self.twist: c for w, c in counts.items()})

    @property
    def rank(self) -> int:
        return self.module.rank


@dataclass
class Decomposition:
    """target = disjoint union of components, as weight multisets."""

    name: str
    statement: str
    target: WeightModule
    components: list[Component] = field(default_factory=list)
    verified: bool = False

    def add(self, label: str, module: WeightModule, twist: DivisorClass | None = None) -> "Decomposition":
        self.components.append(Component(label, module, twist))
        return self

    def union(self) -> Counter[DivisorClass]:
        total: Counter[DivisorClass] = Counter()
        for component in self.components:
            total.update(component.weights())
        return total

    def verify(self) -> bool:
        self.verified = self.union() == self.target.weight_multiset()
        if not self.verified:
            logger.warning(f"{self.name}: decomposition does not match ({self.difference()})")
        return self.verified

    def difference(self) -> str:
        target = self.target.weight_multiset()
        union = self.union()
        missing = sorted((target - union).elements())
        extra = sorted((union - target).elements())
        parts = []
        if missing:
            parts.append("missing " + ", ".join(D.label() for D in missing[:3]))
        if extra:
            parts.append("extra " + ", ".join(D.label() for D in extra[:3]))
        return "; ".join(parts) or "none"

    @property
    def sizes(self) -> list[int]:
        return [c.rank for c in self.components]

    def to_record(self) -> IdentityRecord:
        self.verify()
        sizes = " + ".join(str(s) for s in self.sizes)
        return IdentityRecord(
            id=self.name,
            statement=f"{self.statement}: {self.target.rank} = {sizes}",
            scope=Scope.EXHAUSTIVE,
            lhs_size=self.target.rank,
            rhs_size=sum(self.sizes),
            verified=self.verified,
            counterexample=None if self.verified else self.difference(),
        )


@dataclass
class BranchingResult:
    spec: SubalgebraSpec
    decompositions: list[Decomposition] = field(default_factory=list)
    checks: list[IdentityRecord] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return all(d.verify() for d in self.decompositions) and all(r.verified for r in self.checks)

    def records(self) -> list[IdentityRecord]:
        return [d.to_record() for d in self.decompositions] + list(self.checks)

    def decomposition(self, name: str) -> Decomposition:
        for d in self.decompositions:
            if d.name == name:
                return d
        raise KeyError(name)


def block(name: str, classes: Iterable[DivisorClass], cartan_mult: int = 0, zero: DivisorClass | None = None) -> WeightModule:
    """Bookkeeping module; a Cartan block sits at the zero class unless told otherwise."""
    chosen = list(classes)
    if cartan_mult and zero is None:
        if not chosen:
            raise DomainError(f"Block {name} needs a zero class for its Cartan part")
        zero = DivisorClass.zero(chosen[0].rank)
    return weights_module(name, chosen, cartan_mult, zero)


def set_record(
    id: str, statement: str, lhs: Iterable[DivisorClass], rhs: Iterable[DivisorClass]
) -> IdentityRecord:
    """Multiset equality of two class lists."""
    left = Counter(lhs)
    right = Counter(rhs)
    ok = left == right
    counterexample = None
    if not ok:
        diff = sorted(((left - right) + (right - left)).elements())
        counterexample = ", ".join(D.label() for D in diff[:3])
    return IdentityRecord(
        id=id,
        statement=statement,
        lhs_size=sum(left.values()),
        rhs_size=sum(right.values()),
        verified=ok,
        counterexample=counterexample,
    )


def check_record(id: str, statement: str, ok: bool, size: int = 0, counterexample: str | None = None) -> IdentityRecord:
    return IdentityRecord(
        id=id,
        statement=statement,
        lhs_size=size,
        rhs_size=size if ok else 0,
        verified=ok,
        counterexample=None if ok else counterexample,
    )
