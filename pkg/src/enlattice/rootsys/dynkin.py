"""Cartan matrices and Dynkin type recognition for simply-laced systems."""

from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx

from enlattice.picard import DivisorClass

UNKNOWN_TYPE = "unknown"

# Arm lengths (sorted) of a fork with one trivalent node, keyed to the exceptional type.
_EXCEPTIONAL_FORKS = {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}


@dataclass(frozen=True)
class CartanMatrix:
    """A_ii = 2 and A_ij = -(alpha_i . alpha_j) in the intersection-form convention."""

    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_simple_roots(cls, simple_roots: Sequence[DivisorClass]) -> "CartanMatrix":
        return cls(tuple(tuple(-a.dot(b) for b in simple_roots) for a in simple_roots))

    @property
    def size(self) -> int:
        return len(self.entries)

    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.size)
            for j in range(self.size)
        )

    def is_simply_laced(self) -> bool:
        return all(
            self.entries[i][j] in ((2,) if i == j else (0, -1))
            for i in range(self.size)
            for j in range(self.size)
        )

    def permuted(self, order: Sequence[int]) -> "CartanMatrix":
        return CartanMatrix(tuple(tuple(self.entries[i][j] for j in order) for i in order))

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def dynkin_graph(cartan: CartanMatrix) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(cartan.size))
    for i in range(cartan.size):
        for j in range(i + 1, cartan.size):
            if cartan.entries[i][j]:
                graph.add_edge(i, j, weight=-cartan.entries[i][j])
    return graph


def _component_type(graph: nx.Graph) -> tuple[str, int]:
    k = graph.number_of_nodes()
    if graph.number_of_edges() != k - 1:
        return UNKNOWN_TYPE, k
    degrees = dict(graph.degree())
    if max(degrees.values(), default=0) <= 2:
        return "A", k
    forks = [node for node, deg in degrees.items() if deg >= 3]
    if len(forks) != 1 or degrees[forks[0]] != 3:
        return UNKNOWN_TYPE, k
    rest = graph.copy()
    rest.remove_node(forks[0])
    arms = tuple(sorted(len(c) for c in nx.connected_components(rest)))
    if arms[0] == 1 and arms[1] == 1:
        return "D", k
    if arms in _EXCEPTIONAL_FORKS:
        return _EXCEPTIONAL_FORKS[arms][0], k
    return UNKNOWN_TYPE, k


def dynkin_type(cartan: CartanMatrix) -> str:
    """Type string such as "E6" or "A2xA1"; "0" for the empty system.

    Components are listed by decreasing rank, then family letter.
    """
    if not cartan.is_simply_laced():
        return UNKNOWN_TYPE
    graph = dynkin_graph(cartan)
    parts = [_component_type(graph.subgraph(c).copy()) for c in nx.connected_components(graph)]
    if not parts:
        return "0"
    if any(family == UNKNOWN_TYPE for family, _ in parts):
        return UNKNOWN_TYPE
    parts.sort(key=lambda p: (-p[1], p[0]))
    return "x".join(f"{family}{rank}" for family, rank in parts)
