"""
k-Connected Subgraph

Алгоритм «покрытие, затем дополнение» для минимального k-связного
остовного подграфа:
1. минимальное (k−1)-рёберное покрытие I;
2. включение-минимальное F ⊆ E∖I, при котором (V, I ∪ F) k-связен;
3. вернуть I ∪ F.

Ослабленный вариант (k заменено на k−1) даёт (k−1)-связный подграф
не больше чем с opt(k) рёбрами.
"""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import ceil
from typing import Dict, List, Optional, Sequence

import networkx as nx

from ..config import SolverConfig
from ..connectivity.connectivity import is_k_connected, node_connectivity
from ..cover.edge_cover import CoverSpec, cover_cost, min_cost_edge_cover, min_size_edge_cover
from ..errors import NotConnectedError, ParameterError
from ..graph.core import EdgeSet, MultiGraph, bipartite_double
from ..graph.vectors import CostVector, cost_vector, is_uniform

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RatioCertificates:
    """
    Гарантии качества, вычисленные на экземпляре

    bounds — верхние оценки на |I ∪ F| (или стоимость), holds — выполнены ли.
    opt_source: "lower-bound" (opt неизвестен, подставлена нижняя оценка)
    или "oracle" (точный оптимум).
    """
    opt: Fraction
    opt_source: str
    value: Fraction
    bounds: Dict[str, Fraction] = field(default_factory=dict)
    holds: Dict[str, bool] = field(default_factory=dict)
    # Обе величины сравнения kn/2 + k/(2(k−1)) и kn/2 + 1, без интерпретации
    thresholds: Dict[str, Fraction] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(self.holds.values())

    def to_dict(self) -> dict:
        return {
            "opt": str(self.opt),
            "opt_source": self.opt_source,
            "value": str(self.value),
            "bounds": {k: str(v) for k, v in self.bounds.items()},
            "holds": dict(self.holds),
            "thresholds": {k: str(v) for k, v in self.thresholds.items()},
        }


def ratio_bounds(
    n: int,
    k: int,
    opt: Fraction,
    directed: bool,
    beta: Optional[Fraction] = None
) -> Dict[str, Fraction]:
    """
    Верхние оценки на результат алгоритма при известном opt

    improved:    (1 − 1/k)·opt + n  (орграф: + 2n)
    worst_case:  (1 + 1/k)·opt
    previous:    opt + n/2          (орграф: opt + n) — прежняя гарантия
    beta_metric: (1 − 1/k + 1/(kn) + 2β/(k(1−β)))·opt, только стоимости
    """
    opt = Fraction(opt)
    if beta is not None:
        beta = Fraction(beta)
        factor = 1 - Fraction(1, k) + Fraction(1, k * n) + 2 * beta / (k * (1 - beta))
        return {"beta_metric": factor * opt}

    additive = 2 * n if directed else n
    return {
        "improved": (1 - Fraction(1, k)) * opt + additive,
        "worst_case": (1 + Fraction(1, k)) * opt,
        "previous": opt + Fraction(additive, 2),
    }


def size_lower_bound(n: int, k: int, directed: bool) -> Fraction:
    """|E| >= kn/2 (орграф: kn) для любого k-связного остовного подграфа"""
    return Fraction(k * n) if directed else Fraction(ceil(Fraction(k * n, 2)))


@dataclass(frozen=True)
class KcsSolution:
    """Результат: покрытие I, дополнение F и сертификаты"""
    cover: EdgeSet
    augmentation: EdgeSet
    k: int
    n: int
    directed: bool
    total_size: int
    total_cost: Optional[Fraction]
    lower_bound: Fraction
    forest_ok: bool
    target_k: int
    ratio_certificates: RatioCertificates

    @property
    def edges(self) -> EdgeSet:
        return self.cover | self.augmentation

    @property
    def forest_limit(self) -> int:
        return 2 * self.n - 1 if self.directed else self.n - 1

    def certify(self, opt, beta: Optional[Fraction] = None) -> "KcsSolution":
        """Пересчитать сертификаты с точным оптимумом (из оракула)"""
        value = self.total_cost if beta is not None else Fraction(self.total_size)
        certificates = _certificates(
            self.n, self.target_k, Fraction(opt), "oracle", value, self.directed, beta,
            relaxed=self.k < self.target_k,
        )
        return replace(self, ratio_certificates=certificates)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "target_k": self.target_k,
            "I": sorted(self.cover),
            "F": sorted(self.augmentation),
            "size_I": len(self.cover),
            "size_F": len(self.augmentation),
            "total_size": self.total_size,
            "total_cost": None if self.total_cost is None else str(self.total_cost),
            "lower_bound": str(self.lower_bound),
            "forest_ok": self.forest_ok,
            "forest_limit": self.forest_limit,
            "ratio_certificates": self.ratio_certificates.to_dict(),
        }


def _certificates(
    n: int,
    k: int,
    opt: Fraction,
    source: str,
    value: Fraction,
    directed: bool,
    beta: Optional[Fraction] = None,
    relaxed: bool = False
) -> RatioCertificates:
    bounds = ratio_bounds(n, k, opt, directed, beta)
    if relaxed:
        bounds["relaxed"] = opt
    # Против нижней оценки opt гарантии не проверяются
    holds = {name: value <= bound for name, bound in bounds.items()} if source == "oracle" else {}
    thresholds = {}
    if k >= 2:
        thresholds = {
            "kn/2 + k/(2(k-1))": Fraction(k * n, 2) + Fraction(k, 2 * (k - 1)),
            "kn/2 + 1": Fraction(k * n, 2) + 1,
        }
    return RatioCertificates(
        opt=opt, opt_source=source, value=value, bounds=bounds, holds=holds, thresholds=thresholds
    )


def is_acyclic(g: MultiGraph, edge_ids: EdgeSet) -> bool:
    """
    F — лес (неориентированный граф) или образ F в двудольном дубле — лес (орграф).
    Параллельные рёбра образуют цикл.
    """
    host = bipartite_double(g).graph if g.directed else g
    forest = nx.MultiGraph()
    forest.add_nodes_from(range(host.n))
    forest.add_edges_from(host.edges[e] for e in edge_ids)
    return nx.is_forest(forest)


def _scan_order(g: MultiGraph, candidates: Sequence[int], c: Optional[CostVector]) -> List[int]:
    if c is None:
        return sorted(candidates)
    return sorted(candidates, key=lambda e: (-c[e], e))


def minimal_augmentation(
    g: MultiGraph,
    i: EdgeSet,
    k: int,
    c: Optional[Sequence] = None
) -> EdgeSet:
    """
    Включение-минимальное F ⊆ E∖I, при котором (V, I ∪ F) k-связен

    Обратное удаление: начинаем с E∖I, просматриваем рёбра по убыванию
    стоимости (равные — по возрастанию id) и удаляем ребро,
    если k-связность сохраняется.

    Raises:
        NotConnectedError: g не k-связен, допустимого F нет
    """
    if not is_k_connected(g, k):
        raise NotConnectedError(f"Graph is not {k}-connected; no augmentation exists")
    costs = None if c is None else cost_vector(g, c)

    current = set(g.edge_ids)
    for e in _scan_order(g, [e for e in g.edge_ids if e not in i], costs):
        current.discard(e)
        if is_k_connected(g.restrict(current), k):
            logger.debug("reverse-delete: drop edge %d", e)
        else:
            current.add(e)

    return frozenset(current - set(i))


def _cover_then_augment(
    g: MultiGraph,
    connectivity: int,
    c: Optional[CostVector],
    config: Optional[SolverConfig]
):
    demand = connectivity - 1
    if demand < 1:
        cover: EdgeSet = frozenset()
    elif c is None or is_uniform(c):
        cover = min_size_edge_cover(g, CoverSpec(demand, g.directed))
    else:
        cover = min_cost_edge_cover(g, c, CoverSpec(demand, g.directed), config)
    augmentation = minimal_augmentation(g, cover, connectivity, c)
    return cover, augmentation


def _build_solution(
    g: MultiGraph,
    cover: EdgeSet,
    augmentation: EdgeSet,
    k: int,
    target_k: int,
    c: Optional[CostVector]
) -> KcsSolution:
    edges = cover | augmentation
    lower = size_lower_bound(g.n, target_k, g.directed)
    total_cost = None if c is None else cover_cost(c, edges)
    return KcsSolution(
        cover=cover,
        augmentation=augmentation,
        k=k,
        n=g.n,
        directed=g.directed,
        total_size=len(edges),
        total_cost=total_cost,
        lower_bound=lower,
        forest_ok=is_acyclic(g, augmentation),
        target_k=target_k,
        ratio_certificates=_certificates(
            g.n, target_k, lower, "lower-bound", Fraction(len(edges)), g.directed,
            relaxed=k < target_k,
        ),
    )


def algorithm1(
    g: MultiGraph,
    k: int,
    c: Optional[Sequence] = None,
    config: Optional[SolverConfig] = None
) -> KcsSolution:
    """
    Минимальное (по размеру или стоимости) (k−1)-покрытие + минимальное дополнение

    Для единичных стоимостей шаг 1 всегда идёт через решатель по размеру.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if not is_k_connected(g, k):
        raise NotConnectedError(f"Input graph is not {k}-connected", report=node_connectivity(g))

    costs = None if c is None else cost_vector(g, c)
    cover, augmentation = _cover_then_augment(g, k, costs, config)
    solution = _build_solution(g, cover, augmentation, k, k, costs)

    logger.debug(
        "algorithm1 k=%d: |I|=%d |F|=%d total=%d",
        k, len(cover), len(augmentation), solution.total_size,
    )
    return solution


def kcs_relaxed(
    g: MultiGraph,
    k: int,
    config: Optional[SolverConfig] = None
) -> KcsSolution:
    """
    (k−1)-связный остовный подграф не больше чем с opt(k) рёбрами

    Тот же алгоритм с k, заменённым на k−1: I — минимальное (k−2)-покрытие.
    """
    if k < 2:
        raise ParameterError(f"Relaxed variant needs k >= 2, got {k}")
    if not is_k_connected(g, k):
        raise NotConnectedError(f"Input graph is not {k}-connected", report=node_connectivity(g))

    cover, augmentation = _cover_then_augment(g, k - 1, None, config)
    return _build_solution(g, cover, augmentation, k - 1, k, None)
