"""Graph exports of incidence data: DOT text and node-link JSON."""

import json
import logging
from enum import Enum

import networkx as nx

from enlattice.census import PairingKind, enumerate_lines, incidence_graph, involution_pairs, singular_fibers
from enlattice.exceptions import DomainError
from enlattice.picard import DivisorClass, PicardLattice
from enlattice.rootsys import build_root_system, dynkin_graph

logger = logging.getLogger(__name__)


class GraphKind(str, Enum):
    LINE_INCIDENCE = "line-incidence"
    BITANGENT_PAIRS = "bitangent-pairs"
    SINGULAR_FIBERS = "singular-fibers"
    DYNKIN = "dynkin"


def _class_graph(lattice: PicardLattice, nodes: list[DivisorClass], edges: list[tuple[DivisorClass, DivisorClass]]) -> nx.Graph:
    index = {D: i for i, D in enumerate(nodes)}
    graph = nx.Graph(n=lattice.n)
    for i, D in enumerate(nodes):
        graph.add_node(i, cls=D.to_json(), label=D.label())
    for a, b in edges:
        graph.add_edge(index[a], index[b], weight=a.dot(b))
    return graph


def build_graph(kind: GraphKind | str, lattice: PicardLattice, ruling: DivisorClass | None = None) -> nx.Graph:
    kind = GraphKind(kind)
    if kind == GraphKind.LINE_INCIDENCE:
        return incidence_graph(lattice)
    if kind == GraphKind.BITANGENT_PAIRS:
        pairing = involution_pairs(lattice, PairingKind.BITANGENT)
        return _class_graph(lattice, enumerate_lines(lattice), list(pairing.pairs))
    if kind == GraphKind.SINGULAR_FIBERS:
        if lattice.n < 1:
            raise DomainError("Singular fibers need n >= 1")
        R = ruling if ruling is not None else lattice.H - lattice.L(1)
        pairing = singular_fibers(lattice, R)
        return _class_graph(lattice, pairing.support, list(pairing.pairs))
    system = build_root_system(lattice)
    graph = dynkin_graph(system.cartan)
    graph.graph["n"] = lattice.n
    graph.graph["type"] = system.type
    for i, root in enumerate(system.simple_roots):
        graph.nodes[i]["cls"] = root.to_json()
        graph.nodes[i]["label"] = root.label()
    return graph


def to_dot(graph: nx.Graph, name: str) -> str:
    """DOT text with nodes in index order and edges sorted."""
    lines = [f'graph "{name}" {{']
    for node in sorted(graph.nodes):
        label = graph.nodes[node].get("label", str(node))
        lines.append(f'  {node} [label="{label}"];')
    for u, v in sorted(tuple(sorted(e)) for e in graph.edges):
        weight = graph.edges[u, v].get("weight", 1)
        lines.append(f'  {u} -- {v} [weight={weight}, label="{weight}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: nx.Graph) -> str:
    data = nx.node_link_data(graph, edges="edges")
    data["nodes"] = sorted(data["nodes"], key=lambda node: node["id"])
    data["edges"] = sorted(data["edges"], key=lambda edge: (edge["source"], edge["target"]))
    return json.dumps(data, indent=2)


def from_json(text: str) -> nx.Graph:
    return nx.node_link_graph(json.loads(text), edges="edges")


def export_graph(kind: GraphKind | str, lattice: PicardLattice, fmt: str = "dot", ruling: DivisorClass | None = None) -> str:
    kind = GraphKind(kind)
    graph = build_graph(kind, lattice, ruling)
    logger.info(f"{kind.value} on X_{lattice.n}: {graph.number_of_nodes()} nodes, {graph.number_of_edges()} edges")
    if fmt == "dot":
        return to_dot(graph, f"{kind.value}-X{lattice.n}")
    if fmt == "json":
        return to_json(graph)
    raise DomainError(f"Unknown graph format: {fmt}")
