"""Configuration searches among lines: d-gons, pairings and singular fibers."""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import Enum

import networkx as nx
import numpy as np

from enlattice.constants import DEFAULT_DGON_NODE_BUDGET
from enlattice.exceptions import BudgetExceededError, DomainError
from enlattice.picard import DivisorClass, PicardLattice

from .enumerate import enumerate_lines, enumerate_rulings, is_ruling

logger = logging.getLogger(__name__)


class PairingKind(str, Enum):
    BITANGENT = "bitangent"
    TRIPLE_POINT = "triple-point"
    SINGULAR_FIBER = "singular-fiber"
    RULING_DUAL = "ruling-dual"


@dataclass(frozen=True)
class Pairing:
    """Unordered pairs of classes of one kind."""

    pairs: tuple[tuple[DivisorClass, DivisorClass], ...]
    kind: PairingKind

    @property
    def support(self) -> list[DivisorClass]:
        return sorted(c for pair in self.pairs for c in pair)

    def is_perfect_matching(self) -> bool:
        """Each class of the support appears in exactly one pair."""
        support = self.support
        return len(support) == len(set(support)) == 2 * len(self.pairs)

    def partner(self, D: DivisorClass) -> DivisorClass:
        for x, y in self.pairs:
            if x == D:
                return y
            if y == D:
                return x
        raise DomainError(f"{D.label()} is not in this {self.kind.value} pairing")


def _pairing(
    classes: Sequence[DivisorClass],
    partner_of: Callable[[DivisorClass], DivisorClass],
    kind: PairingKind,
) -> Pairing:
    pool = set(classes)
    pairs: list[tuple[DivisorClass, DivisorClass]] = []
    seen: set[DivisorClass] = set()
    for c in sorted(pool):
        if c in seen:
            continue
        other = partner_of(c)
        if other not in pool or other == c:
            raise DomainError(f"{c.label()} has no {kind.value} partner among the given classes")
        seen.update((c, other))
        pairs.append((min(c, other), max(c, other)))
    return Pairing(tuple(sorted(pairs)), kind)


def intersection_matrix(classes: Sequence[DivisorClass]) -> np.ndarray:
    """Pairwise intersection numbers as an integer matrix."""
    if not classes:
        return np.zeros((0, 0), dtype=np.int64)
    coeffs = np.array([c.coeffs for c in classes], dtype=np.int64)
    form = np.diag([1] + [-1] * (coeffs.shape[1] - 1)).astype(np.int64)
    return coeffs @ form @ coeffs.T


def singular_fibers(lattice: PicardLattice, R: DivisorClass) -> Pairing:
    """The n-1 singular fibers of the conic bundle defined by a ruling R."""
    if not is_ruling(R, lattice):
        raise DomainError(f"{R.label()} is not a ruling on X_{lattice.n} (need R.R=0, R.K=-2)")
    components = [C for C in enumerate_lines(lattice) if C.dot(R) == 0]
    pairing = _pairing(components, lambda C: R - C, PairingKind.SINGULAR_FIBER)
    logger.debug(f"Ruling {R.label()} on X_{lattice.n}: {len(pairing.pairs)} singular fibers")
    return pairing


_INVOLUTION_RANKS = {
    PairingKind.BITANGENT: 7,
    PairingKind.TRIPLE_POINT: 8,
    PairingKind.RULING_DUAL: 5,
}


def involution_pairs(lattice: PicardLattice, rule: PairingKind | str) -> Pairing:
    """Pairs exchanged by a canonical involution.

    bitangent (X_7): l <-> -K-l; triple-point (X_8): l <-> -2K-l;
    ruling-dual (X_5): R <-> -K-R.
    """
    rule = PairingKind(rule)
    if rule not in _INVOLUTION_RANKS:
        raise DomainError(f"{rule.value} is not an involution rule")
    expected = _INVOLUTION_RANKS[rule]
    if lattice.n != expected:
        raise DomainError(f"The {rule.value} pairing lives on X_{expected}, not X_{lattice.n}")
    K = lattice.K
    if rule == PairingKind.BITANGENT:
        return _pairing(enumerate_lines(lattice), lambda l: -K - l, rule)
    if rule == PairingKind.TRIPLE_POINT:
        return _pairing(enumerate_lines(lattice), lambda l: -(K * 2) - l, rule)
    return _pairing(enumerate_rulings(lattice), lambda R: -K - R, rule)


class _CycleSearch:
    """Depth-first search for induced d-cycles in the line graph."""

    def __init__(self, meet: np.ndarray, d: int, budget: int):
        self.meet = meet
        self.d = d
        self.budget = budget
        self.nodes = 0
        self.found: list[tuple[int, ...]] = []
        self.adjacent = [np.flatnonzero(row == 1).tolist() for row in meet]

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"d-gon search truncated after {self.budget} nodes (d={self.d}); "
                f"raise budget.dgon_nodes or ENLATTICE_BUDGET"
            )

    def run(self) -> list[tuple[int, ...]]:
        for start in range(len(self.meet)):
            self._extend([start])
        return self.found

    def _extend(self, path: list[int]) -> None:
        self._tick()
        start, last = path[0], path[-1]
        if len(path) == self.d:
            if self.meet[last, start] == 1 and path[1] < path[-1]:
                self.found.append(tuple(path))
            return
        closing = len(path) == self.d - 1
        for v in self.adjacent[last]:
            if v <= start or v in path:
                continue
            # v may only meet its two cycle neighbours
            inner = path[1:-1] if closing else path[:-1]
            if any(self.meet[v, u] != 0 for u in inner):
                continue
            self._extend(path + [v])


def find_dgons(
    lattice: PicardLattice, d: int, budget: int = DEFAULT_DGON_NODE_BUDGET
) -> list[tuple[DivisorClass, ...]]:
    """All d-gons of lines, each as a cycle-ordered tuple starting at its least line.

    A 2-gon is a pair of lines meeting with multiplicity 2. For d >= 3,
    consecutive lines meet once and non-consecutive lines are disjoint.
    """
    if not 2 <= d <= 8:
        raise DomainError(f"d-gon size {d} outside 2..8")
    lines = enumerate_lines(lattice)
    meet = intersection_matrix(lines)
    if d == 2:
        rows, cols = np.nonzero(np.triu(meet == 2, k=1))
        result = [(lines[i], lines[j]) for i, j in zip(rows.tolist(), cols.tolist(), strict=True)]
    else:
        search = _CycleSearch(meet, d, budget)
        cycles = search.run()
        logger.info(f"X_{lattice.n}: {len(cycles)} {d}-gons, {search.nodes} search nodes")
        result = [tuple(lines[i] for i in cycle) for cycle in cycles]
    return sorted(result)


def incidence_graph(lattice: PicardLattice, classes: Sequence[DivisorClass] | None = None) -> nx.Graph:
    """Lines as nodes, joined when they meet, weighted by intersection number."""
    nodes = list(classes) if classes is not None else enumerate_lines(lattice)
    meet = intersection_matrix(nodes)
    graph = nx.Graph(n=lattice.n)
    for i, D in enumerate(nodes):
        graph.add_node(i, cls=D.to_json(), label=D.label())
    rows, cols = np.nonzero(np.triu(meet > 0, k=1))
    for i, j in zip(rows.tolist(), cols.tolist(), strict=True):
        graph.add_edge(i, j, weight=int(meet[i, j]))
    return graph
