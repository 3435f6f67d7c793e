"""
B-Matching

Максимальное b-паросочетание:
- общий граф — через гаджет с копиями узлов и обычное паросочетание;
- двудольный граф — через максимальный поток.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..errors import GraphError
from ..graph.core import EdgeSet, MultiGraph, two_coloring
from .blossom import max_matching
from .flow import FlowNetwork

logger = logging.getLogger(__name__)

# b(v) для каждого узла
DegreeBound = Sequence[int]


def _check_bound(g: MultiGraph, b: DegreeBound) -> List[int]:
    if len(b) != g.n:
        raise GraphError(f"Degree bound has {len(b)} entries, graph has {g.n} nodes")
    values = [int(x) for x in b]
    for v, x in enumerate(values):
        if x < 0:
            raise GraphError(f"Degree bound b({v}) = {x} is negative")
    return values


@dataclass(frozen=True)
class BMatchingGadget:
    """
    Гаджет сведения b-паросочетания к паросочетанию

    Узел v → b(v) копий; ребро e = uv → пара e_u — e_v,
    e_u соединён со всеми копиями u, e_v — со всеми копиями v.
    """
    graph: MultiGraph
    source: MultiGraph
    copies: Tuple[Tuple[int, ...], ...]      # copies[v]: узлы-копии v
    edge_nodes: Tuple[Tuple[int, int], ...]  # edge_nodes[e] = (e_u, e_v)

    @property
    def copy_count(self) -> int:
        return sum(len(c) for c in self.copies)

    def is_copy(self, node: int) -> bool:
        return 0 <= node < self.copy_count


def build_gadget(g: MultiGraph, b: DegreeBound) -> BMatchingGadget:
    """Построить гаджет для (g, b)"""
    if g.directed:
        raise GraphError("b-matching gadget expects an undirected graph")
    bound = _check_bound(g, b)

    copies = []
    next_node = 0
    for v in range(g.n):
        copies.append(tuple(range(next_node, next_node + bound[v])))
        next_node += bound[v]

    edge_nodes = []
    edges = []
    for u, v in g.edges:
        e_u, e_v = next_node, next_node + 1
        next_node += 2
        edge_nodes.append((e_u, e_v))
        edges.append((e_u, e_v))
        edges.extend((c, e_u) for c in copies[u])
        edges.extend((c, e_v) for c in copies[v])

    return BMatchingGadget(
        graph=MultiGraph(next_node, tuple(edges), directed=False),
        source=g,
        copies=tuple(copies),
        edge_nodes=tuple(edge_nodes),
    )


def max_b_matching(g: MultiGraph, b: DegreeBound) -> EdgeSet:
    """
    Максимальное по мощности b-паросочетание в неориентированном графе

    ν(гаджет) = m + ν_b. После решения пара (e_u, e_v), у которой
    к копии привязан только один конец, перепривязывается на ребро e_u — e_v
    (размер не меняется), после чего декодирование однозначно.
    """
    gadget = build_gadget(g, b)
    matching = max_matching(gadget.graph)

    mate = [-1] * gadget.graph.n
    for idx in matching:
        x, y = gadget.graph.edges[idx]
        mate[x] = y
        mate[y] = x

    result = []
    for e, (e_u, e_v) in enumerate(gadget.edge_nodes):
        u_copy = gadget.is_copy(mate[e_u])
        v_copy = gadget.is_copy(mate[e_v])
        if u_copy and v_copy:
            result.append(e)
            continue
        if u_copy and mate[e_v] == -1:
            mate[mate[e_u]] = -1
            mate[e_u], mate[e_v] = e_v, e_u
        elif v_copy and mate[e_u] == -1:
            mate[mate[e_v]] = -1
            mate[e_u], mate[e_v] = e_v, e_u
        elif mate[e_u] != e_v:
            raise RuntimeError(f"gadget matching not maximum at edge {e}")

    if len(matching) != g.m + len(result):
        raise RuntimeError("gadget identity violated: |M| != m + nu_b")

    logger.debug("b-matching: m=%d nu_b=%d gadget nodes=%d", g.m, len(result), gadget.graph.n)
    return frozenset(result)


def bipartite_max_b_matching(g: MultiGraph, b: DegreeBound) -> EdgeSet:
    """
    Максимальное b-паросочетание в двудольном графе через поток

    источник → левая доля (ёмкость b), ребро (1), правая доля → сток (b).
    """
    if g.directed:
        raise GraphError("bipartite_max_b_matching expects an undirected graph")
    coloring = two_coloring(g)
    if coloring is None:
        raise GraphError("Graph is not bipartite")
    bound = _check_bound(g, b)

    source, sink = g.n, g.n + 1
    network = FlowNetwork(g.n + 2)
    for v in range(g.n):
        if coloring[v] == 0:
            network.add_arc(source, v, bound[v])
        else:
            network.add_arc(v, sink, bound[v])

    edge_arcs = []
    for u, v in g.edges:
        left, right = (u, v) if coloring[u] == 0 else (v, u)
        edge_arcs.append(network.add_arc(left, right, 1))

    network.max_flow(source, sink)
    return frozenset(e for e, arc in enumerate(edge_arcs) if network.cap[arc] == 0)
