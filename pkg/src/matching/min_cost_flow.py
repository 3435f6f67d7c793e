"""
Min-Cost Flow

Последовательные кратчайшие пути (Беллман–Форд, точные рациональные стоимости)
и минимальное по стоимости b-рёберное покрытие двудольного графа.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from ..errors import GraphError, InfeasibleError
from ..graph.core import EdgeSet, MultiGraph, two_coloring
from .b_matching import DegreeBound, _check_bound

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


class MinCostFlowNetwork:
    """Остаточная сеть со стоимостями; дуга a и a ^ 1 — пара прямая/обратная"""

    def __init__(self, size: int):
        self.size = size
        self.head: List[int] = []
        self.cap: List[int] = []
        self.cost: List[Number] = []
        self.adj: List[List[int]] = [[] for _ in range(size)]

    def add_arc(self, u: int, v: int, cap: int, cost: Number) -> int:
        arc = len(self.head)
        self.head += [v, u]
        self.cap += [cap, 0]
        self.cost += [cost, -cost]
        self.adj[u].append(arc)
        self.adj[v].append(arc + 1)
        return arc

    def _shortest_path(self, s: int) -> Tuple[List[Optional[Number]], List[int]]:
        dist: List[Optional[Number]] = [None] * self.size
        parent = [-1] * self.size
        dist[s] = 0
        for _ in range(self.size - 1):
            changed = False
            for u in range(self.size):
                if dist[u] is None:
                    continue
                for arc in self.adj[u]:
                    if self.cap[arc] <= 0:
                        continue
                    v = self.head[arc]
                    candidate = dist[u] + self.cost[arc]
                    if dist[v] is None or candidate < dist[v]:
                        dist[v] = candidate
                        parent[v] = arc
                        changed = True
            if not changed:
                break
        return dist, parent

    def min_cost_flow(self, s: int, t: int, stop_at_nonnegative: bool = False) -> Tuple[int, Number]:
        """
        Наращивать поток по кратчайшим путям

        Args:
            stop_at_nonnegative: Остановиться, когда кратчайший путь перестал
                быть отрицательным (поток произвольной величины минимальной стоимости)

        Returns:
            (величина потока, стоимость)
        """
        flow, total = 0, 0
        while True:
            dist, parent = self._shortest_path(s)
            if dist[t] is None:
                break
            if stop_at_nonnegative and dist[t] >= 0:
                break
            push = None
            v = t
            while v != s:
                arc = parent[v]
                push = self.cap[arc] if push is None else min(push, self.cap[arc])
                v = self.head[arc ^ 1]
            v = t
            while v != s:
                arc = parent[v]
                self.cap[arc] -= push
                self.cap[arc ^ 1] += push
                v = self.head[arc ^ 1]
            flow += push
            total += push * dist[t]
        return flow, total


def min_cost_bipartite_b_edge_cover(
    g: MultiGraph,
    c: Sequence[Number],
    b: DegreeBound
) -> EdgeSet:
    """
    Минимальное по стоимости подмножество рёбер с deg(v) >= b(v)

    Нижние границы на степени выбранных рёбер равносильны верхним границам
    deg(v) − b(v) на степени выброшенных. Выброшенные рёбра — b-паросочетание
    максимального веса: поток со стоимостью −c(e), пока путь отрицателен.
    """
    if g.directed:
        raise GraphError("Bipartite b-edge-cover expects an undirected graph")
    coloring = two_coloring(g)
    if coloring is None:
        raise GraphError("Graph is not bipartite")
    bound = _check_bound(g, b)
    if len(c) != g.m:
        raise GraphError(f"Cost vector has {len(c)} entries, graph has {g.m} edges")
    if any(x < 0 for x in c):
        raise GraphError("Edge costs must be nonnegative")

    degrees = g.degrees()
    for v in range(g.n):
        if degrees[v] < bound[v]:
            raise InfeasibleError(f"Node {v} has degree {degrees[v]} < demand {bound[v]}", node=v)

    slack = [degrees[v] - bound[v] for v in range(g.n)]
    source, sink = g.n, g.n + 1
    network = MinCostFlowNetwork(g.n + 2)
    for v in range(g.n):
        if coloring[v] == 0:
            network.add_arc(source, v, slack[v], 0)
        else:
            network.add_arc(v, sink, slack[v], 0)

    edge_arcs = []
    for idx, (u, v) in enumerate(g.edges):
        left, right = (u, v) if coloring[u] == 0 else (v, u)
        edge_arcs.append(network.add_arc(left, right, 1, -c[idx]))

    removed, gain = network.min_cost_flow(source, sink, stop_at_nonnegative=True)
    logger.debug("bipartite b-edge-cover: removed %d edges, saved %s", removed, -gain)

    return frozenset(e for e, arc in enumerate(edge_arcs) if network.cap[arc] == 1)
