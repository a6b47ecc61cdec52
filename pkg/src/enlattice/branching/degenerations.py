"""Label combinatorics of degenerate del Pezzo surfaces.

When X_n degenerates to a union of simpler surfaces, its lines become
labels built from marked points on the double curves and rulings of the
components. Each case comes with a maximal-rank subalgebra of E_n whose
Weyl group orbits on the smooth lines (or rulings) should match the label
components one for one. The label side is built here; the class side comes
from the census, so the two are independent.
"""

import logging
from collections import Counter
from collections.abc import Callable, Sequence
from enum import Enum
from itertools import combinations, product

from enlattice.census import enumerate_lines, enumerate_rulings
from enlattice.exceptions import ConstructionError
from enlattice.picard import DivisorClass, PicardLattice, make_lattice, sum_classes
from enlattice.report import IdentityRecord, Scope, record
from enlattice.rootsys import RootSystem, build_root_system, weyl_orbit

from .spec import set_record

logger = logging.getLogger(__name__)

Label = tuple


class DegenerationCase(str, Enum):
    X5_TWO_QUADRICS = "X5-two-quadrics"
    X6_THREE_PLANES = "X6-three-planes"
    X6_PLANE_QUADRIC = "X6-plane-quadric"
    X7_DOUBLE_PLANE = "X7-double-plane"


def two_quadric_lines() -> list[Label]:
    """(point of Z, ruling, component): Z has 4 points, each quadric 2 rulings."""
    return [("line", p, r, k) for p, r, k in product(range(4), range(2), range(2))]


def two_quadric_rulings() -> list[Label]:
    """Pairs of points of Z, then a ruling on each component."""
    pairs = [("pair", p, q) for p, q in combinations(range(4), 2)]
    return pairs + [("rulings", r1, r2) for r1, r2 in product(range(2), range(2))]


def three_plane_lines() -> list[Label]:
    """(block k, s, t): s marks a point on double line k, t one on line k+1."""
    return [(k, s, t) for k in range(3) for s, t in product(range(3), range(3))]


def three_plane_triples() -> list[tuple[Label, Label, Label]]:
    """Support of the degenerate cubic: one label per block, indices chained around the triangle."""
    return [((0, a, b), (1, b, d), (2, d, a)) for a, b, d in product(range(3), range(3), range(3))]


def plane_quadric_lines() -> list[Label]:
    pairs = [("pair", p, q) for p, q in combinations(range(6), 2)]
    return pairs + [("point", p, r) for p, r in product(range(6), range(2))]


def double_plane_lines() -> list[Label]:
    """A pair of the 8 points of Z on either plane."""
    return [(plane, p, q) for plane in range(2) for p, q in combinations(range(8), 2)]


def double_plane_quadruples() -> tuple[list[frozenset[Label]], list[frozenset[Label]]]:
    """Support of the degenerate quartic.

    Case 1: four pairs on one plane forming a perfect matching of Z.
    Case 2: two distinct pairs, each taken on both planes.
    """
    matchings = _perfect_matchings(tuple(range(8)))
    first = [frozenset((plane, *pair) for pair in m) for plane in range(2) for m in matchings]
    pairs = list(combinations(range(8), 2))
    second = [
        frozenset((plane, *pair) for plane in range(2) for pair in (P, Q))
        for P, Q in combinations(pairs, 2)
    ]
    return first, second


def _perfect_matchings(points: tuple[int, ...]) -> list[tuple[tuple[int, int], ...]]:
    if not points:
        return [()]
    head, rest = points[0], points[1:]
    found = []
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1 :]
        found.extend(((head, partner),) + m for m in _perfect_matchings(remaining))
    return found


def _covers(labels: list[Label], supports: list, per_label: int) -> bool:
    counts: Counter[Label] = Counter(x for s in supports for x in s)
    return set(counts) == set(labels) and set(counts.values()) == {per_label}


def _exceptional_sum(X: PicardLattice, count: int) -> DivisorClass:
    return sum_classes((X.L(i) for i in range(1, count + 1)), X.n)


# Simple roots of the subalgebra attached to each case, and its type.
def _two_quadric_roots(X: PicardLattice) -> list[DivisorClass]:
    H, L = X.H, X.L
    return [L(1) - L(2), L(2) - L(3), H - L(1) - L(4) - L(5), L(4) - L(5), H - L(1) - L(2) - L(3)]


def _three_plane_roots(X: PicardLattice) -> list[DivisorClass]:
    H, L = X.H, X.L
    return [
        L(1) - L(2),
        L(2) - L(3),
        L(4) - L(5),
        L(5) - L(6),
        H - L(1) - L(2) - L(3),
        H - L(4) - L(5) - L(6),
    ]


def _plane_quadric_roots(X: PicardLattice) -> list[DivisorClass]:
    return [X.L(i) - X.L(i + 1) for i in range(1, 6)] + [X.H * 2 - _exceptional_sum(X, 6)]


def _double_plane_roots(X: PicardLattice) -> list[DivisorClass]:
    return [X.L(i) - X.L(i + 1) for i in range(1, 7)] + [X.H * 2 - _exceptional_sum(X, 6)]


_SUBALGEBRAS: dict[DegenerationCase, tuple[int, str, Callable[[PicardLattice], list[DivisorClass]]]] = {
    DegenerationCase.X5_TWO_QUADRICS: (5, "A3xA1xA1", _two_quadric_roots),
    DegenerationCase.X6_THREE_PLANES: (6, "A2xA2xA2", _three_plane_roots),
    DegenerationCase.X6_PLANE_QUADRIC: (6, "A5xA1", _plane_quadric_roots),
    DegenerationCase.X7_DOUBLE_PLANE: (7, "A7", _double_plane_roots),
}


def degeneration_subsystem(case: DegenerationCase | str) -> RootSystem:
    """The subalgebra of E_n whose orbits the label components follow."""
    n, _, simple_roots = _SUBALGEBRAS[DegenerationCase(case)]
    X = make_lattice(n)
    simple = simple_roots(X)
    full = build_root_system(X)
    stray = [s for s in simple if not full.is_root(s)]
    if stray:
        raise ConstructionError(f"{stray[0].label()} is not a root of E_{n}")
    base = RootSystem(X, tuple(simple), tuple(simple))
    return full.subsystem(r for s in simple for r in weyl_orbit(s, base))


def orbit_sizes(classes: Sequence[DivisorClass], system: RootSystem) -> list[int]:
    """Sizes of the Weyl orbits of system on classes, largest first."""
    remaining = set(classes)
    sizes = []
    while remaining:
        orbit = set(weyl_orbit(min(remaining), system))
        if not orbit <= remaining:
            raise ConstructionError("Weyl orbit leaves the class set")
        remaining -= orbit
        sizes.append(len(orbit))
    return sorted(sizes, reverse=True)


def component_sizes(labels: Sequence[Label], component: Callable[[Label], object]) -> list[int]:
    return sorted(Counter(component(label) for label in labels).values(), reverse=True)


def plane_quadric_classes(X: PicardLattice) -> dict[Label, DivisorClass]:
    """Point pairs go to H-L_p-L_q; a point p with ruling r to L_p or 2H minus the other five."""
    total = _exceptional_sum(X, X.n)
    classes: dict[Label, DivisorClass] = {}
    for label in plane_quadric_lines():
        if label[0] == "pair":
            _, p, q = label
            classes[label] = X.H - X.L(p + 1) - X.L(q + 1)
        else:
            _, p, r = label
            classes[label] = X.L(p + 1) if r == 0 else X.H * 2 - total + X.L(p + 1)
    return classes


def double_plane_classes(X: PicardLattice) -> dict[Label, DivisorClass]:
    """Point 0 of Z is special: {0, i} goes to L_i and {i, j} to 2H minus the other five.

    The second plane is the image of the first under l -> -K - l.
    """
    total = _exceptional_sum(X, X.n)
    classes: dict[Label, DivisorClass] = {}
    for plane, p, q in double_plane_lines():
        first = X.L(q) if p == 0 else X.H * 2 - total + X.L(p) + X.L(q)
        classes[(plane, p, q)] = first if plane == 0 else -X.K - first
    return classes


def degeneration_counts(case: DegenerationCase | str) -> list[IdentityRecord]:
    """Label sets against the census: total counts, the component split and the subalgebra type."""
    case = DegenerationCase(case)
    tag = f"degeneration.{case.value}"
    n, expected_type, _ = _SUBALGEBRAS[case]
    X = make_lattice(n)
    system = degeneration_subsystem(case)
    lines = enumerate_lines(X)

    def counted(name: str, what: str, labels: list, classes: list[DivisorClass]) -> IdentityRecord:
        return record(
            f"{tag}.{name}",
            f"one {what[:-1]} label per {what[:-1]} of the smooth X_{n}",
            len(set(labels)),
            len(classes),
            scope=Scope.COMBINATORIAL,
        )

    def split(
        name: str,
        statement: str,
        labels: list,
        component: Callable[[Label], object],
        classes: list[DivisorClass],
    ) -> IdentityRecord:
        parts = component_sizes(labels, component)
        orbits = orbit_sizes(classes, system)
        logger.debug(f"{tag}.{name}: labels {parts}, {system.type} orbits {orbits}")
        return record(
            f"{tag}.{name}",
            statement,
            len(labels),
            len(classes),
            verified=parts == orbits,
            scope=Scope.COMBINATORIAL,
            counterexample=None if parts == orbits else f"labels {parts}, orbits {orbits}",
        )

    def named(name: str, statement: str, classes: dict[Label, DivisorClass]) -> IdentityRecord:
        """The label map hits every smooth line once and sends each component into one orbit."""
        images: dict[object, set[DivisorClass]] = {}
        for label, D in classes.items():
            images.setdefault(label[0], set()).add(D)
        scattered = next(
            (k for k, part in images.items() if set(weyl_orbit(min(part), system)) != part), None
        )
        result = set_record(f"{tag}.{name}", statement, list(classes.values()), lines)
        return result.model_copy(
            update={
                "scope": Scope.COMBINATORIAL,
                "verified": result.verified and scattered is None,
                "counterexample": result.counterexample
                or (None if scattered is None else f"component {scattered} is not one orbit"),
            }
        )

    subalgebra = record(
        f"{tag}.subalgebra",
        f"the subalgebra of E_{n} is {expected_type}",
        system.rank,
        n,
        verified=system.type == expected_type,
        scope=Scope.COMBINATORIAL,
        counterexample=None if system.type == expected_type else f"got {system.type}",
    )

    if case == DegenerationCase.X5_TWO_QUADRICS:
        rulings = enumerate_rulings(X)
        return [
            subalgebra,
            counted("lines", "lines", two_quadric_lines(), lines),
            split("lines-split", "16 = 4x2 + 4x2", two_quadric_lines(), lambda l: l[3], lines),
            counted("rulings", "rulings", two_quadric_rulings(), rulings),
            split(
                "rulings-split",
                "10 = 6 + 4, point pairs and ruling pairs",
                two_quadric_rulings(),
                lambda l: l[0],
                rulings,
            ),
        ]
    if case == DegenerationCase.X6_THREE_PLANES:
        labels = three_plane_lines()
        triples = three_plane_triples()
        return [
            subalgebra,
            counted("lines", "lines", labels, lines),
            split("lines-split", "27 = 9 + 9 + 9, one block per double line", labels, lambda l: l[0], lines),
            record(
                f"{tag}.cubic-support",
                "27 chained triples, each label in exactly 3",
                len(triples),
                27,
                verified=len(set(triples)) == 27 and _covers(labels, triples, 3),
                scope=Scope.COMBINATORIAL,
            ),
        ]
    if case == DegenerationCase.X6_PLANE_QUADRIC:
        labels = plane_quadric_lines()
        return [
            subalgebra,
            counted("lines", "lines", labels, lines),
            split("lines-split", "27 = 15 + 12, pairs and point-rulings", labels, lambda l: l[0], lines),
            named("classes", "the labels name the 27 lines", plane_quadric_classes(X)),
        ]

    labels = double_plane_lines()
    first, second = double_plane_quadruples()
    return [
        subalgebra,
        counted("lines", "lines", labels, lines),
        split("lines-split", "56 = 28 + 28, one part per plane", labels, lambda l: l[0], lines),
        named("classes", "labels name the 56 lines, planes swapped by -K", double_plane_classes(X)),
        record(
            f"{tag}.quartic-matchings",
            "210 perfect-matching quadruples, each label in 15",
            len(set(first)),
            210,
            verified=len(set(first)) == 210 and _covers(labels, first, 15),
            scope=Scope.COMBINATORIAL,
        ),
        record(
            f"{tag}.quartic-doubled",
            "378 doubled-pair quadruples, each label in 27",
            len(set(second)),
            378,
            verified=len(set(second)) == 378 and _covers(labels, second, 27),
            scope=Scope.COMBINATORIAL,
        ),
    ]


def all_degenerations() -> list[IdentityRecord]:
    return [r for case in DegenerationCase for r in degeneration_counts(case)]
