"""The verification suites behind `enlattice verify`.

Each suite takes the largest n to visit and the resolved run settings and
returns identity records in a fixed order, so reports are reproducible.
"""

import logging
import time
from collections.abc import Callable, Sequence
from itertools import permutations

import numpy as np
import sympy

from enlattice import __version__
from enlattice.branching import (
    BranchingResult,
    DegenerationCase,
    decompose_fixed_line,
    decompose_fixed_ruling,
    decompose_parity,
    decompose_section,
    degeneration_counts,
    e7_centralizer,
    small_n_checks,
)
from enlattice.census import (
    PairingKind,
    enumerate_lines,
    enumerate_roots,
    enumerate_rulings,
    find_dgons,
    involution_pairs,
)
from enlattice.config import RunSettings
from enlattice.constants import (
    ALGEBRA_DIMENSIONS,
    EXPECTED_TYPES,
    LINE_COUNTS,
    MAX_WEYL_ORDER_RANK,
    ROOT_COUNTS,
    RULING_COUNTS,
    WEYL_GROUP_ORDERS,
)
from enlattice.exceptions import DomainError
from enlattice.liealg import (
    InvariantPairing,
    build_algebra,
    c6_on_weights,
    c6_support,
    e8_jacobi_check,
    e8_via_d8,
    f7_on_weights,
    f7_support,
    form_c6,
    form_f7,
    gamma_equivariance_check,
    invariance_check,
    jacobi_check,
    lines_module,
    module_axiom_check,
    q5_pairing,
    q7_pairing,
    quadruples,
    rulings_module,
)
from enlattice.picard import PicardLattice, gram_matrix, kperp_basis, make_lattice, sum_classes
from enlattice.rootsys import build_root_system, weyl_group_order, weyl_orbit

from .models import IdentityRecord, Report, Scope, record

logger = logging.getLogger(__name__)

SuiteFn = Callable[[int, RunSettings], list[IdentityRecord]]

EXHAUSTIVE_JACOBI_MAX = 6
EXHAUSTIVE_LINES_MODULE_MAX = 6
EXHAUSTIVE_RULINGS_MODULE_MAX = 5
EXHAUSTIVE_SECTIONS_MAX = 6
EXHAUSTIVE_FIXED_RULING_MAX = 7
RULING_SAMPLES = 240  # as many X_8 rulings as there are X_8 lines
FORM_SAMPLES = 10_000
SYMMETRY_SAMPLE = 200


def _lattices(n_min: int, n_max: int) -> list[PicardLattice]:
    return [make_lattice(n) for n in range(n_min, n_max + 1)]


def census_suite(n_max: int, settings: RunSettings) -> list[IdentityRecord]:
    records = []
    for X in _lattices(1, min(n_max, 8)):
        n = X.n
        lines = len(enumerate_lines(X))
        records.append(
            record(f"census.X{n}.lines", f"X_{n} has {LINE_COUNTS[n]} lines", lines, LINE_COUNTS[n])
        )
        if n in RULING_COUNTS:
            records.append(
                record(
                    f"census.X{n}.rulings",
                    f"X_{n} has {RULING_COUNTS[n]} rulings",
                    len(enumerate_rulings(X)),
                    RULING_COUNTS[n],
                )
            )
        roots = len(enumerate_roots(X))
        records.append(
            record(f"census.X{n}.roots", f"X_{n} has {ROOT_COUNTS[n]} roots", roots, ROOT_COUNTS[n])
        )
        records.append(
            record(f"census.X{n}.dimension", f"dim E_{n} = {n} + #roots", n + roots, ALGEBRA_DIMENSIONS[n])
        )
        det = int(sympy.Matrix(gram_matrix(kperp_basis(X))).det())
        expected = (-1) ** n * (9 - n)
        records.append(record(f"census.X{n}.kperp-det", "det of the Gram matrix of K-perp", det, expected))
    return records


def rootsys_suite(n_max: int, settings: RunSettings) -> list[IdentityRecord]:
    records = []
    for X in _lattices(2, min(n_max, 8)):
        system = build_root_system(X)
        kind = system.type
        records.append(
            record(
                f"rootsys.X{X.n}.type",
                f"roots of X_{X.n} form {EXPECTED_TYPES[X.n]}",
                1,
                1,
                verified=kind == EXPECTED_TYPES[X.n],
                counterexample=None if kind == EXPECTED_TYPES[X.n] else f"got {kind}",
            )
        )
    for X in _lattices(1, min(n_max, 8)):
        if X.n == 2:
            continue
        orbit = weyl_orbit(X.L(1), build_root_system(X), settings.orbit_cap)
        records.append(
            record(
                f"rootsys.X{X.n}.line-orbit",
                "the lines form a single Weyl orbit",
                len(orbit),
                LINE_COUNTS[X.n],
                verified=set(orbit) == set(enumerate_lines(X)),
            )
        )
    for X in _lattices(4, min(n_max, MAX_WEYL_ORDER_RANK)):
        records.append(
            record(
                f"rootsys.X{X.n}.weyl-order",
                f"|W(E_{X.n})| = {WEYL_GROUP_ORDERS[X.n]}",
                weyl_group_order(build_root_system(X)),
                WEYL_GROUP_ORDERS[X.n],
            )
        )
    return records


_PAIRING_CASES = (
    (5, PairingKind.RULING_DUAL, 5, 2),
    (7, PairingKind.BITANGENT, 28, 2),
    (8, PairingKind.TRIPLE_POINT, 120, 3),
)


def pairings_suite(n_max: int, settings: RunSettings) -> list[IdentityRecord]:
    records = []
    for n, kind, count, meet in _PAIRING_CASES:
        if n > n_max:
            continue
        pairing = involution_pairs(make_lattice(n), kind)
        ok = pairing.is_perfect_matching() and all(a.dot(b) == meet for a, b in pairing.pairs)
        records.append(
            record(
                f"pairings.X{n}.{kind.value}",
                f"{count} {kind.value} pairs meeting {meet} times",
                len(pairing.pairs),
                count,
                verified=ok and len(pairing.pairs) == count,
            )
        )
    return records


def dgons_suite(n_max: int, settings: RunSettings) -> list[IdentityRecord]:
    """No d-gon below n = 9 - d; at n = 9 - d every d-gon is anticanonical."""
    records = []
    for d in (2, 3, 4):
        for X in _lattices(1, min(n_max, 9 - d, 7)):
            dgons = find_dgons(X, d, settings.dgon_nodes)
            if X.n < 9 - d:
                records.append(record(f"dgons.X{X.n}.d{d}", f"no {d}-gons on X_{X.n}", len(dgons), 0))
                continue
            bad = [g for g in dgons if sum_classes(g, X.n) != -X.K]
            records.append(
                record(
                    f"dgons.X{X.n}.d{d}",
                    f"every {d}-gon on X_{X.n} sums to -K",
                    len(dgons),
                    len(dgons) - len(bad),
                    verified=bool(dgons) and not bad,
                    counterexample=", ".join(l.label() for l in bad[0]) if bad else None,
                )
            )
    return records


def jacobi_records(n: int, settings: RunSettings, samples: int | None = None) -> list[IdentityRecord]:
    """Jacobi identity, exhaustive up to E_6 unless a sample count is given."""
    algebra = build_algebra(make_lattice(n))
    if samples is None and n > EXHAUSTIVE_JACOBI_MAX:
        samples = settings.samples
    records = [jacobi_check(algebra, samples, settings.seed)]
    if n == 8:
        model = e8_via_d8()
        records.append(e8_jacobi_check(model, samples or settings.samples, settings.seed))
    return records


def module_records(n: int, settings: RunSettings, samples: int | None = None) -> list[IdentityRecord]:
    """Module axiom on L_n (exhaustive to n = 6) and R_n (exhaustive to n = 5)."""
    algebra = build_algebra(make_lattice(n))
    sampled = samples if samples is not None else min(settings.samples, FORM_SAMPLES)
    records = [
        module_axiom_check(
            lines_module(algebra),
            None if samples is None and n <= EXHAUSTIVE_LINES_MODULE_MAX else sampled,
            settings.seed,
        )
    ]
    if n <= 7:
        records.append(
            module_axiom_check(
                rulings_module(algebra),
                None if samples is None and n <= EXHAUSTIVE_RULINGS_MODULE_MAX else sampled,
                settings.seed,
            )
        )
    return records


def algebra_suite(n_max: int, settings: RunSettings) -> list[IdentityRecord]:
    records = []
    for X in _lattices(1, min(n_max, 8)):
        n = X.n
        algebra = build_algebra(X)
        records.append(
            record(
                f"algebra.E{n}.dimension",
                f"dim LE_{n} = {ALGEBRA_DIMENSIONS[n]}",
                algebra.dimension,
                ALGEBRA_DIMENSIONS[n],
            )
        )
        records.extend(jacobi_records(n, settings))
        records.extend(module_records(n, settings))
    if n_max >= 8:
        model = e8_via_d8()
        records.append(
            record(
                "algebra.E8-via-D8.roots",
                "LD_8 + S+(K) has the 240 roots of X_8",
                len(model.root_set),
                240,
                verified=model.root_set == set(enumerate_roots(make_lattice(8))),
            )
        )
        records.append(record("algebra.E8-via-D8.dimension", "248 = 120 + 128", model.dimension, 248))
    return records


def _pairing_records(name: str, pairing: InvariantPairing, symmetry: int) -> list[IdentityRecord]:
    det = pairing.determinant()
    return [
        record(
            f"forms.{name}.gram",
            f"{name} has a perfect-matching Gram matrix of determinant +-1",
            abs(det),
            1,
            verified=pairing.is_perfect_matching() and abs(det) == 1,
        ),
        record(
            f"forms.{name}.symmetry",
            f"{name} is " + ("symmetric" if symmetry == 1 else "alternating"),
            pairing.symmetry(),
            symmetry,
        ),
    ]


def forms_records(n: int, settings: RunSettings, samples: int | None = None) -> list[IdentityRecord]:
    """The invariant forms living on X_n: q5, c6, q7 and f7, the S+ pairing on X_8."""
    X = make_lattice(n)
    sampled = samples if samples is not None else min(settings.samples, FORM_SAMPLES)
    if n == 5:
        R5 = rulings_module(build_algebra(X))
        q5 = q5_pairing(R5)
        return _pairing_records("q5", q5, 1) + [invariance_check("q5", q5, [R5, R5], -X.K)]
    if n == 6:
        L6 = lines_module(build_algebra(X))
        support = c6_support(L6)
        triangles = {tuple(sorted(g)) for g in find_dgons(X, 3, settings.dgon_nodes)}
        asymmetric = next(
            (t for t in support if len({c6_on_weights(L6, *p) for p in permutations(t)}) != 1), None
        )
        return [
            record(
                "forms.c6.support",
                "the cubic form is supported on the 45 triangles",
                len(support),
                45,
                verified={tuple(sorted(t)) for t in support} == triangles,
            ),
            record(
                "forms.c6.symmetry",
                "c6 is symmetric on its support",
                len(support),
                len(support),
                verified=asymmetric is None,
                counterexample=None if asymmetric is None else ", ".join(l.label() for l in asymmetric),
            ),
            invariance_check(
                "c6", lambda u, v, w: form_c6(L6, u, v, w), [L6, L6, L6], -X.K, sampled, settings.seed
            ),
        ]
    if n == 7:
        L7 = lines_module(build_algebra(X))
        q7 = q7_pairing(L7)
        return (
            _pairing_records("q7", q7, -1)
            + [invariance_check("q7", q7, [L7, L7], -X.K)]
            + _f7_records(L7, X)
            + [
                invariance_check(
                    "f7",
                    lambda u, v, w, z: form_f7(L7, u, v, w, z),
                    [L7, L7, L7, L7],
                    -(X.K * 2),
                    sampled,
                    settings.seed,
                )
            ]
        )
    if n == 8:
        model = e8_via_d8()
        return (
            _pairing_records("S+", model.pairing, 1)
            + [invariance_check("S+ pairing", model.pairing, [model.spin, model.spin], -(X.K * 2))]
            + [gamma_equivariance_check(model, sampled, settings.seed)]
        )
    return []


def forms_suite(n_max: int, settings: RunSettings) -> list[IdentityRecord]:
    return [r for n in range(5, min(n_max, 8) + 1) for r in forms_records(n, settings)]


def _meet_pattern(quad: Sequence) -> tuple[int, ...]:
    return tuple(sorted(quad[i].dot(quad[j]) for i in range(4) for j in range(i + 1, 4)))


def _f7_records(L7, X: PicardLattice) -> list[IdentityRecord]:
    case_one = (1, 1, 1, 1, 1, 1)
    case_two = (0, 0, 1, 1, 2, 2)
    support = set(f7_support(L7))
    candidates = quadruples(L7.weights, -(X.K * 2))
    expected = {q for q in candidates if _meet_pattern(q) in (case_one, case_two)}
    asymmetric = next(
        (
            q
            for q in sorted(support)[:SYMMETRY_SAMPLE]
            if len({f7_on_weights(L7, *p) for p in permutations(q)}) != 1
        ),
        None,
    )
    return [
        record(
            "forms.f7.support",
            "the quartic form is supported exactly on the two intersection patterns",
            len(support),
            len(expected),
            verified=support == expected,
        ),
        record(
            "forms.f7.symmetry",
            "f7 is symmetric on its support",
            min(len(support), SYMMETRY_SAMPLE),
            min(len(support), SYMMETRY_SAMPLE),
            verified=asymmetric is None,
            scope=Scope.SAMPLED,
            counterexample=None if asymmetric is None else ", ".join(l.label() for l in asymmetric),
        ),
    ]


def _aggregate(
    id: str, statement: str, runs: list[tuple[str, BranchingResult]], scope: Scope = Scope.EXHAUSTIVE
) -> IdentityRecord:
    failed = [label for label, result in runs if not result.verified]
    return record(
        id,
        statement,
        len(runs),
        len(runs) - len(failed),
        verified=not failed,
        counterexample=failed[0] if failed else None,
        scope=scope,
    )


def fixed_line_suite(n_max: int, settings: RunSettings) -> list[IdentityRecord]:
    records = []
    for X in _lattices(2, min(n_max, 8)):
        orbit = weyl_orbit(X.L(X.n), build_root_system(X), settings.orbit_cap)
        runs = [(L.label(), decompose_fixed_line(X, L)) for L in orbit]
        standard = next(result for label, result in runs if label == X.L(X.n).label())
        records.extend(standard.records())
        records.append(
            _aggregate(
                f"branch.fixed-line.X{X.n}.all", f"fixed-line reduction holds for all {len(runs)} lines", runs
            )
        )
    return records


def fixed_ruling_suite(n_max: int, settings: RunSettings) -> list[IdentityRecord]:
    records = []
    for X in _lattices(2, min(n_max, 8)):
        R = X.H - X.L(1)
        records.extend(decompose_fixed_ruling(X, R).records())
        rulings = enumerate_rulings(X)
        if X.n <= EXHAUSTIVE_FIXED_RULING_MAX:
            runs = [(r.label(), decompose_fixed_ruling(X, r)) for r in rulings]
            records.append(
                _aggregate(
                    f"branch.fixed-ruling.X{X.n}.all",
                    f"fixed-ruling reduction holds for all {len(runs)} rulings",
                    runs,
                )
            )
        else:
            rng = np.random.default_rng(settings.seed)
            count = min(settings.samples, RULING_SAMPLES, len(rulings))
            picks = sorted(int(i) for i in rng.choice(len(rulings), size=count, replace=False))
            runs = [(rulings[i].label(), decompose_fixed_ruling(X, rulings[i])) for i in picks]
            records.append(
                _aggregate(
                    f"branch.fixed-ruling.X{X.n}.sampled",
                    f"fixed-ruling reduction holds for {len(runs)} of {len(rulings)} seeded rulings",
                    runs,
                    scope=Scope.SAMPLED,
                )
            )
    return records


def sections_suite(n_max: int, settings: RunSettings) -> list[IdentityRecord]:
    records = []
    for X in _lattices(3, min(n_max, 8)):
        R = X.H - X.L(1)
        records.extend(decompose_section(X, R, X.L(1)).records())
        records.extend(decompose_section(X, R, X.L(1) - X.L(2)).records())
        if X.n <= EXHAUSTIVE_SECTIONS_MAX:
            sections = [S for S in enumerate_lines(X) if S.dot(R) == 1]
            sections += [T for T in enumerate_roots(X) if T.dot(R) == 1]
            runs = [(s.label(), decompose_section(X, R, s)) for s in sections]
            records.append(
                _aggregate(
                    f"branch.section.X{X.n}.all",
                    f"section reduction holds for all {len(runs)} sections of H-L1",
                    runs,
                )
            )
    return records


def parity_suite(n_max: int, settings: RunSettings) -> list[IdentityRecord]:
    if n_max < 8:
        return []
    X = make_lattice(8)
    records = decompose_parity(X).records()
    # a second degree class: the image of H under the quadratic transformation
    cremona = X.H * 2 - X.L(1) - X.L(2) - X.L(3)
    records.append(
        _aggregate(
            "branch.parity.cremona",
            "the parity split also holds for 2H-L1-L2-L3",
            [(cremona.label(), decompose_parity(X, cremona))],
        )
    )
    records.extend(e7_centralizer(X, X.L(1), X.L(2)).records())
    return records


def small_n_suite(n_max: int, settings: RunSettings) -> list[IdentityRecord]:
    return small_n_checks(n_max)


_DEGENERATION_RANK = {
    DegenerationCase.X5_TWO_QUADRICS: 5,
    DegenerationCase.X6_THREE_PLANES: 6,
    DegenerationCase.X6_PLANE_QUADRIC: 6,
    DegenerationCase.X7_DOUBLE_PLANE: 7,
}


def degenerations_suite(n_max: int, settings: RunSettings) -> list[IdentityRecord]:
    return [r for case, n in _DEGENERATION_RANK.items() if n <= n_max for r in degeneration_counts(case)]


SUITES: dict[str, SuiteFn] = {
    "census": census_suite,
    "rootsys": rootsys_suite,
    "pairings": pairings_suite,
    "dgons": dgons_suite,
    "algebra": algebra_suite,
    "forms": forms_suite,
    "fixed-line": fixed_line_suite,
    "fixed-ruling": fixed_ruling_suite,
    "sections": sections_suite,
    "parity": parity_suite,
    "small-n": small_n_suite,
    "degenerations": degenerations_suite,
}


def run_suites(
    names: Sequence[str] | None,
    n_max: int,
    settings: RunSettings,
    timing: bool = False,
) -> Report:
    """Run the named suites (all by default) in registry order."""
    if not 1 <= n_max <= 8:
        raise DomainError(f"--n-max must lie in 1..8, got {n_max}")
    if n_max > settings.max_rank:
        raise DomainError(f"--n-max {n_max} exceeds the configured limit max_rank={settings.max_rank}")
    chosen = list(SUITES) if not names else list(names)
    unknown = [name for name in chosen if name not in SUITES]
    if unknown:
        raise DomainError(f"Unknown suite(s): {', '.join(unknown)}")
    report = Report(
        suite="all" if not names else ",".join(chosen),
        version=__version__,
        inputs={"n_max": n_max, "samples": settings.samples, "seed": settings.seed},
        timing={} if timing else None,
    )
    for name in SUITES:
        if name not in chosen:
            continue
        start = time.perf_counter()
        records = SUITES[name](n_max, settings)
        elapsed = time.perf_counter() - start
        report.extend(records)
        if report.timing is not None:
            report.timing[name] = round(elapsed, 3)
        logger.info(f"Suite {name}: {sum(r.verified for r in records)}/{len(records)} in {elapsed:.2f}s")
    return report
