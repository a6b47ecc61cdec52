"""Reduction along a fixed line: E_n down to E_{n-1} x u(1).

Blowing down a line L identifies X_n with the blowup of X_{n-1}. A Weyl
word w with w(L) = L_n puts L in standard position; lower-rank classes are
pulled back and carried to L's frame by the reversed word.
"""

import logging
from collections.abc import Callable

from enlattice.census import enumerate_lines, enumerate_roots, enumerate_rulings
from enlattice.exceptions import DomainError
from enlattice.picard import DivisorClass, PicardLattice, make_lattice
from enlattice.rootsys import apply_word, build_root_system, weyl_word

from .spec import BranchingResult, Decomposition, SubalgebraSpec, block, set_record

logger = logging.getLogger(__name__)


def line_frame(lattice: PicardLattice, L: DivisorClass) -> Callable[[DivisorClass], DivisorClass]:
    """Map taking a class on X_{n-1} to its image on X_n in the frame of L."""
    n = lattice.n
    word = weyl_word(L, lattice.L(n), build_root_system(lattice))
    back = word[::-1]
    logger.debug(f"Line {L.label()} reaches L{n} in {len(word)} reflections")
    return lambda D: apply_word(D.pullback(), back)


def decompose_fixed_line(lattice: PicardLattice, L: DivisorClass) -> BranchingResult:
    """Split the lines and roots of X_n by their intersection with L."""
    spec = SubalgebraSpec.fixed_line(lattice, L)
    n = lattice.n
    if n < 2:
        raise DomainError("A fixed-line reduction needs n >= 2")
    place = line_frame(lattice, L)
    lower = make_lattice(n - 1)
    K = lattice.K
    zero = DivisorClass.zero(n)

    low_lines = [place(l) for l in enumerate_lines(lower)]
    low_rulings = [place(r) for r in enumerate_rulings(lower)]
    low_roots = [place(D) for D in enumerate_roots(lower)]
    lines = enumerate_lines(lattice)
    roots = enumerate_roots(lattice)
    result = BranchingResult(spec)

    # lines by l.L
    by_meet: dict[int, list[DivisorClass]] = {
        -1: [L],
        0: low_lines,
        1: [r - L for r in low_rulings],
    }
    if n == 7:
        by_meet[2] = [-K - L]
    if n == 8:
        by_meet[2] = [l - K - L for l in low_lines]
        by_meet[3] = [-(K * 2) - L]

    lines_split = Decomposition(
        f"branch.fixed-line.L{n}", f"L_{n} under LE_{n - 1} x u(1)", block(f"L_{n}", lines)
    )
    lines_split.add(f"L_{n - 1}", block(f"L_{n - 1}", low_lines))
    lines_split.add(f"R_{n - 1}(-L)", block(f"R_{n - 1}", low_rulings), -L)
    lines_split.add("O(L)", block("O(L)", [L]))
    if n == 7:
        lines_split.add("O(-K-L)", block("O(-K-L)", [-K - L]))
    if n == 8:
        lines_split.add(f"L_{n - 1}(-K-L)", block(f"L_{n - 1}", low_lines), -K - L)
        lines_split.add("O(-2K-L)", block("O(-2K-L)", [-(K * 2) - L]))
    result.decompositions.append(lines_split)

    for k, expected in sorted(by_meet.items()):
        actual = [l for l in lines if l.dot(L) == k]
        result.checks.append(
            set_record(
                f"branch.fixed-line.L{n}.meet{k}",
                f"lines of X_{n} meeting {L.label()} {k} times",
                actual,
                expected,
            )
        )

    twin = f"L_{n - 1}"
    algebra_split = Decomposition(
        f"branch.fixed-line.E{n}",
        f"LE_{n} under LE_{n - 1} x " + ("A_1" if n == 8 else "u(1)"),
        block(f"LE_{n}", roots, n, zero),
    )
    algebra_split.add(f"LE_{n - 1}", block(f"LE_{n - 1}", low_roots, n - 1, zero))
    if n == 8:
        algebra_split.add("A_1", block("A_1", [K + L, -K - L], 1, zero))
    else:
        algebra_split.add("u(1)", block("u(1)", [], 1, zero))
    algebra_split.add(f"{twin}(-L)", block(twin, low_lines), -L)
    algebra_split.add(f"{twin}*(L)", block(f"{twin}*", [-l for l in low_lines]), L)
    result.decompositions.append(algebra_split)

    result.checks.append(
        set_record(
            f"branch.fixed-line.E{n}.orthogonal",
            f"roots of X_{n} orthogonal to {L.label()} are the roots of X_{n - 1}",
            [D for D in roots if D.dot(L) == 0],
            low_roots,
        )
    )
    logger.info(f"Fixed line {L.label()} on X_{n}: {'ok' if result.verified else 'FAILED'}")
    return result
