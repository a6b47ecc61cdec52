"""Parity reduction on X_8 and the E_7 centralizer of an A_1.

A degree class H (one third of -K plus eight disjoint lines) splits roots and
lines by the parity of their degree. The even roots are D_8, the even lines
are its half-spin module S+, and E_8 = LD_8 + S+ with S+ shifted by K.
"""

import logging
from collections.abc import Sequence
from itertools import combinations

from enlattice.census import enumerate_lines, enumerate_roots
from enlattice.exceptions import DomainError
from enlattice.picard import DivisorClass, PicardLattice
from enlattice.report import IdentityRecord
from enlattice.rootsys import build_root_system, reflect

from .spec import BranchingResult, Decomposition, SubalgebraSpec, block, check_record, set_record

logger = logging.getLogger(__name__)


def _lines_of(lattice: PicardLattice, H: DivisorClass) -> list[DivisorClass]:
    """The eight disjoint lines E_i with -K + sum E_i = 3H."""
    lines = [l for l in enumerate_lines(lattice) if l.dot(H) == 0]
    if len(lines) != 8:
        raise DomainError(f"{H.label()} contracts {len(lines)} lines, not 8")
    return lines


def exterior_square(classes: Sequence[DivisorClass]) -> list[DivisorClass]:
    return [a + b for a, b in combinations(classes, 2)]


def w8_checks(lattice: PicardLattice, H: DivisorClass) -> list[IdentityRecord]:
    """The vector module W_8 and its exterior square."""
    K = lattice.K
    E = _lines_of(lattice, H)
    shift = -K - H
    stated = E + [-e - K - H for e in E]
    corrected = [-e for e in E] + [e - K - H for e in E]
    even_roots = [D for D in enumerate_roots(lattice) if D.dot(H) % 2 == 0]
    target = even_roots + [DivisorClass.zero(8)] * 8

    matching = all(e + (-e - K - H) == shift for e in E) and len(set(stated)) == 16
    from_stated = sorted(w + K + H for w in exterior_square(stated))
    from_corrected = sorted(w + K + H for w in exterior_square(corrected))
    holds = from_corrected == sorted(target)
    return [
        check_record(
            "branch.parity.w8-pairing",
            "W_8 = {E_i, -E_i-K-H} pairs perfectly into O(-K-H)",
            matching,
            16,
            "matching broken",
        ),
        set_record(
            "branch.parity.lambda2-w",
            "Lambda^2 W + K + H = LD_8 weights for W = {-E_i, E_i-K-H}",
            from_corrected,
            target,
        ),
        check_record(
            "branch.parity.lambda2-w-sign",
            "the sign convention W = {E_i, -E_i-K-H} does not give LD_8; the negated one does",
            holds and from_stated != sorted(target),
            120,
            "sign convention check inconclusive",
        ),
    ]


def decompose_parity(lattice: PicardLattice, H: DivisorClass | None = None) -> BranchingResult:
    """E_8 and L_8 under D_8 for the degree class H."""
    spec = SubalgebraSpec.parity(lattice, H)
    (H,) = spec.classes
    K = lattice.K
    zero = DivisorClass.zero(8)
    roots = enumerate_roots(lattice)
    lines = enumerate_lines(lattice)
    even_roots = [D for D in roots if D.dot(H) % 2 == 0]
    odd_roots = [D for D in roots if D.dot(H) % 2]
    even_lines = [l for l in lines if l.dot(H) % 2 == 0]
    odd_lines = [l for l in lines if l.dot(H) % 2]
    result = BranchingResult(spec)

    counts = (len(even_roots), len(odd_roots), len(even_lines), len(odd_lines))
    result.checks.append(
        check_record(
            "branch.parity.counts",
            "even/odd roots 112/128, even/odd lines 128/112",
            counts == (112, 128, 128, 112),
            480,
            f"got {counts}",
        )
    )
    d8_type = build_root_system(lattice).subsystem(even_roots).type
    result.checks.append(
        check_record("branch.parity.d8-type", "even roots form D8", d8_type == "D8", 112, f"got {d8_type}")
    )

    e8 = Decomposition("branch.parity.E8", "LE_8 under LD_8", block("LE_8", roots, 8, zero))
    e8.add("LD_8", block("LD_8", even_roots, 8, zero))
    e8.add("S+(K)", block("S+", even_lines), K)
    result.decompositions.append(e8)

    l8 = Decomposition("branch.parity.L8", "L_8 under LD_8", block("L_8", lines, 8, -K))
    l8.add("LD_8(-K)", block("LD_8", even_roots, 8, zero), -K)
    l8.add("S+", block("S+", even_lines))
    result.decompositions.append(l8)

    result.checks.extend(w8_checks(lattice, H))
    logger.info(f"Parity split for {H.label()}: {'ok' if result.verified else 'FAILED'}")
    return result


def e7_centralizer(lattice: PicardLattice, L1: DivisorClass, L2: DivisorClass) -> BranchingResult:
    """Roots orthogonal to alpha = L1 - L2 for disjoint lines on X_8: an E_7."""
    spec = SubalgebraSpec.a1_pair(lattice, L1, L2)
    alpha = L1 - L2
    zero = DivisorClass.zero(8)
    roots = enumerate_roots(lattice)
    centralizer = [D for D in roots if D.dot(alpha) == 0]
    up = [D for D in roots if D.dot(alpha) == 1]
    down = [D for D in roots if D.dot(alpha) == -1]
    result = BranchingResult(spec)

    e7_type = build_root_system(lattice).subsystem(centralizer).type
    result.checks.append(
        check_record(
            "branch.a1-pair.e7",
            "roots orthogonal to L1 - L2 form E7 with 126 roots",
            len(centralizer) == 126 and e7_type == "E7",
            126,
            f"got {len(centralizer)} roots of type {e7_type}",
        )
    )
    result.checks.append(
        set_record(
            "branch.a1-pair.doublets",
            "reflection in L1 - L2 pairs the 56 roots with D.alpha = 1 with those with D.alpha = -1",
            [reflect(D, alpha) for D in up],
            down,
        )
    )
    split = Decomposition("branch.a1-pair.E8", "LE_8 under LE_7 x A_1", block("LE_8", roots, 8, zero))
    split.add("LE_7", block("LE_7", centralizer, 7, zero))
    split.add("A_1", block("A_1", [alpha, -alpha], 1, zero))
    split.add("L_7(+)", block("L_7", up))
    split.add("L_7(-)", block("L_7", down))
    result.decompositions.append(split)
    logger.info(f"E_7 centralizer of {alpha.label()}: {'ok' if result.verified else 'FAILED'}")
    return result
