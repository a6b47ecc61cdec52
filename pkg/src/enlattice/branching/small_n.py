"""Low-rank coincidences and the duality identities between L_n and R_n."""

import logging
from itertools import combinations, permutations, product

from enlattice.census import enumerate_lines, enumerate_roots, enumerate_rulings
from enlattice.picard import make_lattice, sum_classes
from enlattice.report import IdentityRecord

from .spec import check_record, set_record

logger = logging.getLogger(__name__)


def x2_checks() -> list[IdentityRecord]:
    X = make_lattice(2)
    l3 = X.H - X.L(1) - X.L(2)
    return [
        set_record(
            "small-n.X2.lines",
            "L_2 = R_2(-l3) + O(l3) with l3 = H-L1-L2",
            enumerate_lines(X),
            [r - l3 for r in enumerate_rulings(X)] + [l3],
        )
    ]


def x3_checks() -> list[IdentityRecord]:
    """Lines of X_3 as W_3 x W_2, for both choices of sign."""
    X = make_lattice(3)
    alpha = X.H - X.L(1) - X.L(2) - X.L(3)
    w3 = [X.L(i) for i in (1, 2, 3)]
    w3_dual = [X.H - X.L(j) - X.L(k) for j, k in ((2, 3), (1, 3), (1, 2))]
    lines = enumerate_lines(X)
    return [
        set_record(
            "small-n.X3.product",
            "lines = {L_i} x {0, H-L1-L2-L3}",
            lines,
            [w + t for w, t in product(w3, (X.K * 0, alpha))],
        ),
        set_record(
            "small-n.X3.dual-product",
            "lines = {H-L_j-L_k} x {0, -(H-L1-L2-L3)}",
            lines,
            [w + t for w, t in product(w3_dual, (X.K * 0, -alpha))],
        ),
    ]


def x4_checks() -> list[IdentityRecord]:
    """X_4: LE_4 = sl(R_4) and L_4 = Lambda^3 R_4 shifted by K."""
    X = make_lattice(4)
    rulings = enumerate_rulings(X)
    roots = enumerate_roots(X)
    lines = enumerate_lines(X)
    return [
        set_record(
            "small-n.X4.roots",
            "roots = {R_i - R_j : i != j}",
            roots,
            [a - b for a, b in permutations(rulings, 2)],
        ),
        check_record(
            "small-n.X4.dimension",
            "dim End_0(R_4) = 4 + 20 = 24",
            len(rulings) ** 2 - 1 == len(roots) + 4 == 24,
            24,
            f"got {len(rulings)} rulings and {len(roots)} roots",
        ),
        set_record(
            "small-n.X4.lambda3",
            "L_4 = Lambda^3 R_4 (K)",
            lines,
            [sum_classes(c, 4) + X.K for c in combinations(rulings, 3)],
        ),
    ]


def duality_checks() -> list[IdentityRecord]:
    """R_6 = -K - L_6, R_7 = roots - K and L_8 = roots - K."""
    X6, X7, X8 = make_lattice(6), make_lattice(7), make_lattice(8)
    return [
        set_record(
            "small-n.X6.dual",
            "R_6 = O(-K) - L_6",
            enumerate_rulings(X6),
            [-X6.K - l for l in enumerate_lines(X6)],
        ),
        set_record(
            "small-n.X7.dual",
            "rulings of X_7 = roots - K",
            enumerate_rulings(X7),
            [D - X7.K for D in enumerate_roots(X7)],
        ),
        set_record(
            "small-n.X8.dual",
            "lines of X_8 = roots - K",
            enumerate_lines(X8),
            [D - X8.K for D in enumerate_roots(X8)],
        ),
    ]


def small_n_checks(n_max: int = 8) -> list[IdentityRecord]:
    records = x2_checks() + x3_checks() + x4_checks()
    records += [r for r in duality_checks() if int(r.id.split(".")[1][1:]) <= n_max]
    logger.debug(f"Small-n checks: {sum(r.verified for r in records)}/{len(records)} hold")
    return records
