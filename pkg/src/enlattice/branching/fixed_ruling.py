"""Reduction along a fixed ruling: E_n down to D_{n-1} x u(1).

A ruling R makes X_n a conic bundle with n-1 singular fibers. The lines in
fibers form the vector module W of LD_{n-1} (the roots orthogonal to R), and
the lines and roots meeting R once are the two half-spin modules S+ and S-.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations

from enlattice.census import enumerate_lines, enumerate_roots, enumerate_rulings, singular_fibers
from enlattice.exceptions import DomainError
from enlattice.picard import DivisorClass, PicardLattice
from enlattice.report import IdentityRecord
from enlattice.rootsys import build_root_system

from .spec import BranchingResult, Decomposition, SubalgebraSpec, block, check_record, set_record

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RulingSets:
    """The classes a ruling R sorts out of X_n."""

    ruling: DivisorClass
    vector: tuple[DivisorClass, ...]
    spin_plus: tuple[DivisorClass, ...]
    spin_minus: tuple[DivisorClass, ...]
    ld_roots: tuple[DivisorClass, ...]
    fibers: tuple[tuple[DivisorClass, DivisorClass], ...] = field(default_factory=tuple)


def ruling_sets(lattice: PicardLattice, R: DivisorClass) -> RulingSets:
    lines = enumerate_lines(lattice)
    roots = enumerate_roots(lattice)
    return RulingSets(
        ruling=R,
        vector=tuple(l for l in lines if l.dot(R) == 0),
        spin_plus=tuple(l for l in lines if l.dot(R) == 1),
        spin_minus=tuple(T for T in roots if T.dot(R) == 1),
        ld_roots=tuple(D for D in roots if D.dot(R) == 0),
        fibers=singular_fibers(lattice, R).pairs,
    )


def expected_ld_type(rank: int) -> str:
    """Dynkin label of D_k, with the low-rank coincidences spelled out."""
    return {1: "0", 2: "A1xA1", 3: "A3"}.get(rank, f"D{rank}")


def clifford_check(lattice: PicardLattice, R: DivisorClass) -> list[IdentityRecord]:
    """Fiber components act between the half-spin sets by adding or removing themselves."""
    sets = ruling_sets(lattice, R)
    plus = set(sets.spin_plus)
    minus = set(sets.spin_minus)
    n = lattice.n
    to_minus = [(S, C) for C in sets.vector for S in sets.spin_plus if S.dot(C) == 0]
    to_plus = [(T, C) for C in sets.vector for T in sets.spin_minus if T.dot(C) == 1]
    bad_minus = next(((S, C) for S, C in to_minus if S - C not in minus), None)
    bad_plus = next(((T, C) for T, C in to_plus if T + C not in plus), None)
    return [
        check_record(
            f"branch.fixed-ruling.X{n}.clifford-minus",
            "S.C = 0 implies S - C lies in S-",
            bad_minus is None,
            len(to_minus),
            None if bad_minus is None else f"S={bad_minus[0].label()} C={bad_minus[1].label()}",
        ),
        check_record(
            f"branch.fixed-ruling.X{n}.clifford-plus",
            "T.C = 1 implies T + C lies in S+",
            bad_plus is None,
            len(to_plus),
            None if bad_plus is None else f"T={bad_plus[0].label()} C={bad_plus[1].label()}",
        ),
    ]


def duality_checks(lattice: PicardLattice, sets: RulingSets) -> list[IdentityRecord]:
    n = lattice.n
    K = lattice.K
    R = sets.ruling
    m = n // 2
    if n % 2 == 0:
        return [
            set_record(
                f"branch.fixed-ruling.X{n}.dual-plus",
                f"{m - 4}R - K - S+ = S-",
                [R * (m - 4) - K - S for S in sets.spin_plus],
                sets.spin_minus,
            )
        ]
    return [
        set_record(
            f"branch.fixed-ruling.X{n}.dual-plus",
            f"{m - 3}R - K - S+ = S+",
            [R * (m - 3) - K - S for S in sets.spin_plus],
            sets.spin_plus,
        ),
        set_record(
            f"branch.fixed-ruling.X{n}.dual-minus",
            f"{m - 4}R - K - S- = S-",
            [R * (m - 4) - K - T for T in sets.spin_minus],
            sets.spin_minus,
        ),
    ]


def _lines_split(lattice: PicardLattice, sets: RulingSets) -> Decomposition:
    n = lattice.n
    K = lattice.K
    R = sets.ruling
    split = Decomposition(
        f"branch.fixed-ruling.L{n}",
        f"L_{n} under LD_{n - 1} x u(1)",
        block(f"L_{n}", enumerate_lines(lattice)),
    )
    split.add("W", block("W", sets.vector))
    split.add("S+", block("S+", sets.spin_plus))
    if n == 6:
        split.add("O(-K-R)", block("O(-K-R)", [-K - R]))
    if n == 7:
        split.add("W(-K-R)", block("W", sets.vector), -K - R)
    return split


def _rulings_split(lattice: PicardLattice, sets: RulingSets) -> Decomposition:
    n = lattice.n
    K = lattice.K
    R = sets.ruling
    rulings = enumerate_rulings(lattice)
    target = block(f"R_{n}", rulings, 7, -K) if n == 7 else block(f"R_{n}", rulings)
    split = Decomposition(f"branch.fixed-ruling.R{n}", f"R_{n} under LD_{n - 1} x u(1)", target)
    split.add("S-(R)", block("S-", sets.spin_minus), R)
    if n <= 6:
        split.add("O(R)", block("O(R)", [R]))
    if n == 5:
        split.add("O(-K-R)", block("O(-K-R)", [-K - R]))
    if n == 6:
        split.add("W(-K-R)", block("W", sets.vector), -K - R)
    if n == 7:
        # pairs from one singular fiber land on -K and fill the Cartan part
        pairs = [C1 + C2 for C1, C2 in combinations(sets.vector, 2)]
        split.add("A_1(-K)", block("A_1", [R + K, -R - K], 1, DivisorClass.zero(n)), -K)
        split.add("Lambda^2 W(-K-R)", block("Lambda^2 W", pairs), -K - R)
        split.add("S-(-K)", block("S-", sets.spin_minus), -K)
    return split


def _algebra_split(lattice: PicardLattice, sets: RulingSets) -> Decomposition:
    n = lattice.n
    K = lattice.K
    R = sets.ruling
    zero = DivisorClass.zero(n)
    m = n // 2
    split = Decomposition(
        f"branch.fixed-ruling.E{n}",
        f"LE_{n} under LD_{n - 1} x " + ("A_1" if n == 7 else "u(1)"),
        block(f"LE_{n}", enumerate_roots(lattice), n, zero),
    )
    split.add(f"LD_{n - 1}", block(f"LD_{n - 1}", sets.ld_roots, n - 1, zero))
    if n == 7:
        split.add("A_1", block("A_1", [R + K, -R - K], 1, zero))
    else:
        split.add("u(1)", block("u(1)", [], 1, zero))
    split.add("S-", block("S-", sets.spin_minus))
    if n % 2:
        split.add(f"S-({4 - m}R+K)", block("S-", sets.spin_minus), R * (4 - m) + K)
    else:
        split.add(f"S+({4 - m}R+K)", block("S+", sets.spin_plus), R * (4 - m) + K)
    if n == 8:
        split.add("W(K)", block("W", sets.vector), K)
        split.add("W*(-K)", block("W*", [-C for C in sets.vector]), -K)
    return split


def decompose_fixed_ruling(lattice: PicardLattice, R: DivisorClass) -> BranchingResult:
    """Sort lines, rulings and roots of X_n against a ruling and verify each block."""
    spec = SubalgebraSpec.fixed_ruling(lattice, R)
    n = lattice.n
    if n < 2:
        raise DomainError("A fixed-ruling reduction needs n >= 2")
    sets = ruling_sets(lattice, R)
    result = BranchingResult(spec)

    sizes = (len(sets.vector), len(sets.spin_plus), len(sets.spin_minus))
    expected = (2 * n - 2, 2 ** (n - 2), 2 ** (n - 2))
    result.checks.append(
        check_record(
            f"branch.fixed-ruling.X{n}.sizes",
            f"|W|, |S+|, |S-| = {expected}",
            sizes == expected,
            sum(expected),
            f"got {sizes}",
        )
    )
    result.checks.append(
        check_record(
            f"branch.fixed-ruling.X{n}.fibers",
            f"{n - 1} singular fibers",
            len(sets.fibers) == n - 1,
            n - 1,
            f"got {len(sets.fibers)}",
        )
    )
    ld_type = build_root_system(lattice).subsystem(sets.ld_roots).type
    result.checks.append(
        check_record(
            f"branch.fixed-ruling.X{n}.ld-type",
            f"roots orthogonal to R form {expected_ld_type(n - 1)}",
            ld_type == expected_ld_type(n - 1),
            len(sets.ld_roots),
            f"got {ld_type}",
        )
    )
    result.checks.extend(duality_checks(lattice, sets))
    result.checks.extend(clifford_check(lattice, R))

    if n <= 7:
        result.decompositions.append(_lines_split(lattice, sets))
        result.decompositions.append(_rulings_split(lattice, sets))
    result.decompositions.append(_algebra_split(lattice, sets))
    logger.info(f"Fixed ruling {R.label()} on X_{n}: {'ok' if result.verified else 'FAILED'}")
    return result
