"""
Brute-Force Oracles

Независимые эталонные решатели полным перебором для приёмочных тестов.
С основными решателями разделяют только ядро графа и предикаты
is_edge_cover / is_k_connected.
"""

import logging
from collections import deque
from fractions import Fraction
from itertools import combinations
from math import ceil
from typing import List, Optional, Sequence, Tuple

from ..config import SolverConfig, resolve
from ..connectivity.connectivity import is_k_connected
from ..cover.edge_cover import CoverSpec, check_feasible, is_edge_cover
from ..errors import GraphError, InstanceTooLargeError, NotConnectedError, ParameterError
from ..graph.core import EdgeSet, MultiGraph
from ..graph.vectors import cost_vector

logger = logging.getLogger(__name__)


def _check_edges_cap(g: MultiGraph, config: SolverConfig):
    if g.m > config.oracle_max_edges:
        raise InstanceTooLargeError(
            f"Oracle cap is {config.oracle_max_edges} edges, instance has {g.m}",
            limit=config.oracle_max_edges,
            actual=g.m,
        )


def _check_nodes_cap(g: MultiGraph, config: SolverConfig):
    if g.n > config.enum_max_nodes:
        raise InstanceTooLargeError(
            f"Oracle cap is {config.enum_max_nodes} nodes, instance has {g.n}",
            limit=config.enum_max_nodes,
            actual=g.n,
        )


def _degrees(g: MultiGraph, ids: Sequence[int]) -> Tuple[List[int], List[int]]:
    out_deg = [0] * g.n
    in_deg = [0] * g.n
    for e in ids:
        u, v = g.edges[e]
        out_deg[u] += 1
        in_deg[v] += 1
    if g.directed:
        return out_deg, in_deg
    both = [a + b for a, b in zip(out_deg, in_deg)]
    return both, both


def _min_degree(g: MultiGraph, ids: Sequence[int]) -> int:
    out_deg, in_deg = _degrees(g, ids)
    return min(min(out_deg), min(in_deg))


# =============================================================================
# ℓ-рёберное покрытие
# =============================================================================

def brute_min_cost_edge_cover(
    g: MultiGraph,
    c: Sequence,
    spec: CoverSpec,
    config: Optional[SolverConfig] = None
) -> Tuple[Fraction, EdgeSet]:
    """
    Минимум стоимости по всем 2^m подмножествам

    Равные стоимости — лексикографически меньший список id.

    Raises:
        InstanceTooLargeError: m > oracle_max_edges
        InfeasibleError: покрытия не существует
    """
    config = resolve(config)
    _check_edges_cap(g, config)
    costs = cost_vector(g, c)
    check_feasible(g, spec)

    best_cost = None
    best: Tuple[int, ...] = tuple(g.edge_ids)
    for size in range(0, g.m + 1):
        for ids in combinations(g.edge_ids, size):
            cost = sum((costs[e] for e in ids), Fraction(0))
            if best_cost is not None and (cost > best_cost or (cost == best_cost and ids >= best)):
                continue
            if is_edge_cover(g, frozenset(ids), spec):
                best_cost, best = cost, ids

    return best_cost, frozenset(best)


# =============================================================================
# k-связный остовный подграф
# =============================================================================

def brute_opt_kcs(
    g: MultiGraph,
    k: int,
    c: Optional[Sequence] = None,
    config: Optional[SolverConfig] = None
) -> Tuple[Fraction, EdgeSet]:
    """
    opt: минимальный размер (или стоимость) k-связного остовного подграфа

    Размеры перебираются по возрастанию, начиная с kn/2 (орграф: kn);
    без стоимостей — выход на первом найденном. Со стоимостями перебор
    обрывается, когда сумма самых дешёвых рёбер данного размера
    уже не меньше найденного.

    Raises:
        InstanceTooLargeError: m > oracle_max_edges
        NotConnectedError: G не k-связен
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    config = resolve(config)
    _check_edges_cap(g, config)
    if not is_k_connected(g, k):
        raise NotConnectedError(f"Input graph is not {k}-connected")

    lower = k * g.n if g.directed else ceil(Fraction(k * g.n, 2))
    costs = None if c is None else cost_vector(g, c)
    cheapest = sorted(costs) if costs is not None else None

    best_cost = None
    best: Tuple[int, ...] = tuple(g.edge_ids)
    for size in range(lower, g.m + 1):
        if costs is not None and best_cost is not None:
            if sum(cheapest[:size], Fraction(0)) > best_cost:
                break
        for ids in combinations(g.edge_ids, size):
            if costs is not None:
                cost = sum((costs[e] for e in ids), Fraction(0))
                if best_cost is not None and (
                    cost > best_cost or (cost == best_cost and ids >= best)
                ):
                    continue
            if _min_degree(g, ids) < k:
                continue
            if not is_k_connected(g.restrict(ids), k):
                continue
            if costs is None:
                logger.debug("brute_opt_kcs k=%d: opt=%d", k, size)
                return Fraction(size), frozenset(ids)
            best_cost, best = cost, ids

    if costs is None:
        raise RuntimeError("k-connected input admits no k-connected subset")
    logger.debug("brute_opt_kcs k=%d: opt cost=%s", k, best_cost)
    return best_cost, frozenset(best)


def brute_max_conn_m_edges(
    g: MultiGraph,
    m: int,
    config: Optional[SolverConfig] = None
) -> int:
    """
    k*: максимальная связность остовного подграфа не больше чем с m рёбрами

    Добавление рёбер не уменьшает связность, поэтому перебираются
    подмножества ровно из min(m, |E|) рёбер.
    """
    if m < 0:
        raise ParameterError(f"Budget must be >= 0, got {m}")
    config = resolve(config)
    _check_edges_cap(g, config)

    size = min(m, g.m)
    limit = g.n - 1
    best = 0
    for ids in combinations(g.edge_ids, size):
        if _min_degree(g, ids) <= best:
            continue
        sub = g.restrict(ids)
        while best < limit and is_k_connected(sub, best + 1):
            best += 1
        if best == limit:
            break
    return best


# =============================================================================
# Связность перебором разрезов
# =============================================================================

def brute_edge_connectivity(g: MultiGraph, config: Optional[SolverConfig] = None) -> int:
    """min |δ(S)| по всем ∅ ≠ S ⊂ V (орграф: дуги, выходящие из S)"""
    if g.n < 2:
        raise GraphError(f"Connectivity needs at least 2 nodes, got {g.n}")
    config = resolve(config)
    _check_nodes_cap(g, config)

    full = (1 << g.n) - 1
    best = g.m
    for mask in range(1, full):
        crossing = 0
        for u, v in g.edges:
            in_u = (mask >> u) & 1
            in_v = (mask >> v) & 1
            if in_u and not in_v or (not g.directed and in_v and not in_u):
                crossing += 1
        best = min(best, crossing)
    return best


def _reach(g: MultiGraph, alive: int, start: int, reverse: bool) -> int:
    seen = 1 << start
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for u, v in g.edges:
            if g.directed:
                src, dst = (v, u) if reverse else (u, v)
                pairs = ((src, dst),)
            else:
                pairs = ((u, v), (v, u))
            for a, b in pairs:
                if a == node and (alive >> b) & 1 and not (seen >> b) & 1:
                    seen |= 1 << b
                    queue.append(b)
    return seen


def _connected_after_removal(g: MultiGraph, removed: int) -> bool:
    alive = ((1 << g.n) - 1) & ~removed
    start = (alive & -alive).bit_length() - 1
    if _reach(g, alive, start, reverse=False) != alive:
        return False
    return not g.directed or _reach(g, alive, start, reverse=True) == alive


def brute_node_connectivity(g: MultiGraph, config: Optional[SolverConfig] = None) -> int:
    """
    Наименьшее |X|, при котором G − X не (сильно) связен;
    n − 1, если такого X нет (полный граф)
    """
    if g.n < 2:
        raise GraphError(f"Connectivity needs at least 2 nodes, got {g.n}")
    config = resolve(config)
    _check_nodes_cap(g, config)

    for size in range(0, g.n - 1):
        for removed in combinations(range(g.n), size):
            mask = sum(1 << v for v in removed)
            if not _connected_after_removal(g, mask):
                return size
    return g.n - 1
