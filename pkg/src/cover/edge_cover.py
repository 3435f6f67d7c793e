"""
Edge Cover

Точные решатели ℓ-рёберного покрытия:
- минимальный размер — дополнение максимального b-паросочетания, b = deg − ℓ;
- минимальная стоимость — двудольный дубль + поток (орграфы, двудольные графы)
  или branch-and-bound (общие неориентированные графы).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from ..config import SolverConfig, resolve
from ..errors import GraphError, InfeasibleError, InstanceTooLargeError, ParameterError
from ..graph.core import EdgeSet, MultiGraph, bipartite_double, is_bipartite, subset_degrees
from ..graph.vectors import CostVector, cost_vector, is_uniform
from ..matching.b_matching import bipartite_max_b_matching, max_b_matching
from ..matching.min_cost_flow import min_cost_bipartite_b_edge_cover

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverSpec:
    """
    Параметры покрытия

    ell: требуемая степень (для орграфа — и исходящая, и входящая)
    """
    ell: int
    directed: bool = False

    def __post_init__(self):
        if self.ell < 1:
            raise ParameterError(f"Cover demand must be >= 1, got {self.ell}")

    @classmethod
    def for_graph(cls, g: MultiGraph, ell: int) -> "CoverSpec":
        return cls(ell=ell, directed=g.directed)


def _check_spec(g: MultiGraph, spec: CoverSpec):
    if spec.directed != g.directed:
        kind = "directed" if g.directed else "undirected"
        raise GraphError(f"Cover spec directedness does not match the {kind} graph")


def is_edge_cover(g: MultiGraph, i: EdgeSet, spec: CoverSpec) -> bool:
    """(V, I) имеет минимальную степень >= ℓ (для орграфа — in и out)"""
    _check_spec(g, spec)
    for idx in i:
        if not 0 <= idx < g.m:
            raise GraphError(f"Edge id {idx} outside [0, {g.m})")
    out_deg, in_deg = subset_degrees(g, i)
    return all(d >= spec.ell for d in out_deg) and all(d >= spec.ell for d in in_deg)


def check_feasible(g: MultiGraph, spec: CoverSpec):
    """Покрытие существует iff E само является покрытием"""
    _check_spec(g, spec)
    out_deg, in_deg = subset_degrees(g, g.edge_ids)
    for v in range(g.n):
        if out_deg[v] < spec.ell or in_deg[v] < spec.ell:
            raise InfeasibleError(
                f"Node {v} has degree below the cover demand {spec.ell}", node=v
            )


def _double_demands(g: MultiGraph, ell: int) -> List[int]:
    return [ell] * (2 * g.n)


def min_size_edge_cover(g: MultiGraph, spec: CoverSpec) -> EdgeSet:
    """
    ℓ-рёберное покрытие минимальной мощности

    I — покрытие iff E∖I удовлетворяет deg(v) <= deg_E(v) − ℓ,
    поэтому |I| = |E| − ν_b.
    """
    check_feasible(g, spec)
    everything = frozenset(g.edge_ids)

    if g.directed:
        double = bipartite_double(g)
        b = [d - spec.ell for d in g.out_degrees()] + [d - spec.ell for d in g.in_degrees()]
        removed = bipartite_max_b_matching(double.graph, b)
    else:
        b = [d - spec.ell for d in g.degrees()]
        removed = max_b_matching(g, b)

    return everything - removed


class _BranchAndBound:
    """
    Перебор решений по рёбрам в порядке убывания стоимости (равные — по id)

    Оценка: текущая стоимость + max(наибольшая по узлу сумма самых дешёвых
    оставшихся рёбер под остаточный спрос, половина суммы таких сумм).
    """

    def __init__(self, g: MultiGraph, c: CostVector, ell: int):
        self.g = g
        self.c = c
        self.order = sorted(g.edge_ids, key=lambda e: (-c[e], e))
        self.need = [ell] * g.n
        self.avail = g.degrees()
        self.chosen: List[int] = []
        self.best_cost = sum(c, Fraction(0))
        self.best = frozenset(g.edge_ids)
        self.nodes = 0

    def _lower_bound(self, pos: int) -> Fraction:
        cheapest: List[List[Fraction]] = [[] for _ in range(self.g.n)]
        # order убывает по стоимости: идём с конца, получаем возрастание
        for e in reversed(self.order[pos:]):
            u, v = self.g.edges[e]
            cheapest[u].append(self.c[e])
            cheapest[v].append(self.c[e])
        per_node = [
            sum(cheapest[v][:self.need[v]], Fraction(0)) if self.need[v] > 0 else Fraction(0)
            for v in range(self.g.n)
        ]
        return max(max(per_node, default=Fraction(0)), sum(per_node, Fraction(0)) / 2)

    def search(self, pos: int, cost: Fraction):
        self.nodes += 1
        if all(x <= 0 for x in self.need):
            if cost < self.best_cost:
                self.best_cost = cost
                self.best = frozenset(self.chosen)
            return
        if pos == len(self.order):
            return
        if cost + self._lower_bound(pos) >= self.best_cost:
            return

        e = self.order[pos]
        u, v = self.g.edges[e]

        # Исключить ребро
        self.avail[u] -= 1
        self.avail[v] -= 1
        if self.need[u] <= self.avail[u] and self.need[v] <= self.avail[v]:
            self.search(pos + 1, cost)

        # Включить ребро
        self.need[u] -= 1
        self.need[v] -= 1
        self.chosen.append(e)
        self.search(pos + 1, cost + self.c[e])
        self.chosen.pop()
        self.need[u] += 1
        self.need[v] += 1
        self.avail[u] += 1
        self.avail[v] += 1


def min_cost_edge_cover(
    g: MultiGraph,
    c: Sequence,
    spec: CoverSpec,
    config: Optional[SolverConfig] = None
) -> EdgeSet:
    """
    ℓ-рёберное покрытие минимальной стоимости

    - орграф: двудольный дубль + min-cost поток;
    - единичные (одинаковые) стоимости: решатель по размеру;
    - двудольный граф: min-cost поток напрямую;
    - иначе branch-and-bound, не больше config.bnb_max_edges рёбер.
    """
    config = resolve(config)
    costs = cost_vector(g, c)
    check_feasible(g, spec)

    if g.directed:
        double = bipartite_double(g)
        return min_cost_bipartite_b_edge_cover(double.graph, costs, _double_demands(g, spec.ell))

    if is_uniform(costs):
        return min_size_edge_cover(g, spec)

    if is_bipartite(g):
        return min_cost_bipartite_b_edge_cover(g, costs, [spec.ell] * g.n)

    if g.m > config.bnb_max_edges:
        raise InstanceTooLargeError(
            f"Branch-and-bound cap is {config.bnb_max_edges} edges, instance has {g.m}",
            limit=config.bnb_max_edges,
            actual=g.m,
        )

    solver = _BranchAndBound(g, costs, spec.ell)
    solver.search(0, Fraction(0))
    logger.debug("branch-and-bound: m=%d nodes=%d cost=%s", g.m, solver.nodes, solver.best_cost)
    return solver.best


def cover_cost(c: Sequence[Fraction], i: EdgeSet) -> Fraction:
    return sum((Fraction(c[e]) for e in i), Fraction(0))
