"""
Connectivity

Точная рёберная и узловая связность мультиграфов через максимальный поток,
проверка k-связности и дробная рёберная связность для P^f_con.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple, Union

import networkx as nx

from ..config import SolverConfig, resolve
from ..errors import GraphError
from ..graph.core import CutMode, EdgeSet, MultiGraph, delta, mask_to_nodes
from ..graph.vectors import frac_vector
from ..matching.flow import FlowNetwork, max_flow

logger = logging.getLogger(__name__)


class ConnKind(Enum):
    """Вид связности"""
    EDGE = "edge"
    NODE = "node"


@dataclass(frozen=True)
class ConnReport:
    """
    Значение связности с минимальным разрезом-свидетелем

    Для EDGE: witness — рёбра разреза, side — маска стороны S
    (для орграфа witness — дуги, выходящие из S).
    Для NODE: witness — маска разделителя, пара (s, t) — разделяемые узлы.
    """
    kind: ConnKind
    value: Union[int, Fraction]
    witness: Union[EdgeSet, int]
    side: int = 0
    pair: Optional[Tuple[int, int]] = None

    @property
    def separator(self) -> List[int]:
        if self.kind is not ConnKind.NODE:
            raise ValueError("separator is defined for node connectivity reports")
        return mask_to_nodes(self.witness)

    def to_dict(self) -> dict:
        witness = (
            sorted(self.witness) if self.kind is ConnKind.EDGE else mask_to_nodes(self.witness)
        )
        return {
            "kind": self.kind.value,
            "value": str(self.value),
            "witness": witness,
            "side": mask_to_nodes(self.side),
        }


def _require_two_nodes(g: MultiGraph):
    if g.n < 2:
        raise GraphError(f"Connectivity needs at least 2 nodes, got {g.n}")


def _cut_edges(g: MultiGraph, side: int) -> EdgeSet:
    return delta(g, side, CutMode.LEAVING if g.directed else CutMode.ALL)


def edge_connectivity(g: MultiGraph) -> ConnReport:
    """
    Глобальная рёберная связность

    Фиксируем s = 0 и минимизируем λ(s, t) по t;
    для орграфа учитываются оба направления.
    """
    _require_two_nodes(g)
    best_value = None
    best_side = 0

    for t in range(1, g.n):
        directions = [(0, t), (t, 0)] if g.directed else [(0, t)]
        for s, sink in directions:
            result = max_flow(g, None, s, sink)
            if best_value is None or result.value < best_value:
                best_value = result.value
                best_side = result.mincut

    value = int(best_value)
    return ConnReport(
        kind=ConnKind.EDGE,
        value=value,
        witness=_cut_edges(g, best_side),
        side=best_side,
    )


def _split_network(g: MultiGraph, s: int, t: int) -> Tuple[FlowNetwork, List[int]]:
    """
    Сеть с расщеплением узлов: v_in = 2v, v_out = 2v + 1

    Внутренние узлы имеют ёмкость 1, рёбра — n (не режутся),
    прямое ребро s→t — ёмкость 1 (считается одним путём).
    """
    big = g.n
    network = FlowNetwork(2 * g.n)
    node_arcs = []
    for v in range(g.n):
        node_arcs.append(network.add_arc(2 * v, 2 * v + 1, big if v in (s, t) else 1))

    for u, v in sorted(g.underlying_pairs()):
        pairs = [(u, v)] if g.directed else [(u, v), (v, u)]
        for a, b in pairs:
            direct = (a, b) == (s, t) or (not g.directed and (a, b) == (t, s))
            network.add_arc(2 * a + 1, 2 * b, 1 if direct else big)
    return network, node_arcs


def local_node_connectivity(
    g: MultiGraph,
    s: int,
    t: int,
    limit: Optional[int] = None
) -> Tuple[int, int]:
    """
    Число внутренне непересекающихся путей s→t (прямое ребро — один путь)

    Returns:
        (значение, маска разделителя из минимального разреза)
    """
    network, node_arcs = _split_network(g, s, t)
    value = network.max_flow(2 * s + 1, 2 * t, limit)
    if limit is not None and value >= limit:
        return value, 0

    seen = network.reachable(2 * s + 1)
    separator = 0
    for v in range(g.n):
        if v not in (s, t) and seen[2 * v] and not seen[2 * v + 1]:
            separator |= 1 << v
    return value, separator


def _node_pairs(g: MultiGraph) -> List[Tuple[int, int]]:
    if g.directed:
        return [(s, t) for s in range(g.n) for t in range(g.n) if s != t]
    return [(s, t) for s in range(g.n) for t in range(s + 1, g.n)]


def node_connectivity(g: MultiGraph) -> ConnReport:
    """
    Глобальная узловая связность

    Параллельные рёбра схлопываются. Значение — минимум по парам узлов
    числа внутренне непересекающихся путей; полный граф даёт n − 1.
    Свидетель берётся с несмежной пары, на которой минимум достигается.
    """
    _require_two_nodes(g)
    pairs_present = g.underlying_pairs()

    def adjacent(s: int, t: int) -> bool:
        if g.directed:
            return (s, t) in pairs_present
        return (min(s, t), max(s, t)) in pairs_present

    best_value = g.n - 1
    witness = None
    for s, t in _node_pairs(g):
        value, separator = local_node_connectivity(g, s, t)
        nonadjacent = not adjacent(s, t)
        if value < best_value:
            best_value = value
            witness = (separator, (s, t)) if nonadjacent else None
        elif value == best_value and witness is None and nonadjacent:
            witness = (separator, (s, t))

    if witness is None or bin(witness[0]).count("1") != best_value:
        # Полный граф (или минимум только на смежных парах): свидетеля-разделителя нет
        return ConnReport(kind=ConnKind.NODE, value=best_value, witness=0)

    return ConnReport(kind=ConnKind.NODE, value=best_value, witness=witness[0], pair=witness[1])


def is_k_connected(g: MultiGraph, k: int) -> bool:
    """
    k-связность: k внутренне непересекающихся путей между любыми узлами

    Поток по каждой паре останавливается, как только найдено k путей.
    """
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    if g.n < k + 1:
        return False

    # Быстрый отсев по степеням (параллельные рёбра не считаются)
    pairs = g.underlying_pairs()
    out_deg = [0] * g.n
    in_deg = [0] * g.n
    for u, v in pairs:
        out_deg[u] += 1
        in_deg[v] += 1
    if g.directed:
        if min(out_deg) < k or min(in_deg) < k:
            return False
    elif min(a + b for a, b in zip(out_deg, in_deg)) < k:
        return False

    for s, t in _node_pairs(g):
        value, _ = local_node_connectivity(g, s, t, limit=k)
        if value < k:
            return False
    return True


def is_strongly_connected(g: MultiGraph) -> bool:
    return g.n >= 2 and is_k_connected(g, 1)


def _enumerate_min_cut(g: MultiGraph, x: Sequence[Fraction]) -> Tuple[Fraction, int]:
    # Целые веса над общим знаменателем, обход масок кодом Грея
    scale = lcm(*(value.denominator for value in x))
    weight = [int(value * scale) for value in x]
    full = g.all_nodes_mask

    def crossing(idx: int, mask: int) -> int:
        u, v = g.edges[idx]
        in_u = (mask >> u) & 1
        in_v = (mask >> v) & 1
        if in_u and not in_v or (in_v and not in_u and not g.directed):
            return weight[idx]
        return 0

    # Для неориентированного графа δ(S) = δ(V∖S): достаточно S ∋ 0
    first = 0 if g.directed else 1
    mask = 0 if g.directed else 1
    value = sum(crossing(idx, mask) for idx in g.edge_ids)
    best_value = None
    best_mask = 0
    for step in range(1 << (g.n - first)):
        if step:
            node = first + (step & -step).bit_length() - 1
            touched = set(g.incidence[node])
            value -= sum(crossing(idx, mask) for idx in touched)
            mask ^= 1 << node
            value += sum(crossing(idx, mask) for idx in touched)
        if mask in (0, full):
            continue
        if best_value is None or (value, mask) < (best_value, best_mask):
            best_value = value
            best_mask = mask
    return Fraction(best_value, scale), best_mask


def _stoer_wagner_min_cut(g: MultiGraph, x: Sequence[Fraction]) -> Tuple[Fraction, int]:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    for idx, (u, v) in enumerate(g.edges):
        weight = graph[u][v]["weight"] + x[idx] if graph.has_edge(u, v) else x[idx]
        graph.add_edge(u, v, weight=weight)

    if not nx.is_connected(graph):
        component = nx.node_connected_component(graph, 0)
        return Fraction(0), sum(1 << v for v in component)

    value, (side, _) = nx.stoer_wagner(graph)
    return Fraction(value), sum(1 << v for v in side)


def _flow_min_cut(g: MultiGraph, x: Sequence[Fraction]) -> Tuple[Fraction, int]:
    best_value = None
    best_mask = 0
    for t in range(1, g.n):
        for s, sink in ((0, t), (t, 0)):
            result = max_flow(g, x, s, sink)
            if best_value is None or result.value < best_value:
                best_value = result.value
                best_mask = result.mincut
    return best_value, best_mask


def fractional_edge_connectivity(
    g: MultiGraph,
    x: Sequence,
    config: Optional[SolverConfig] = None
) -> ConnReport:
    """
    min x(δ(S)) по ∅ ≠ S ⊂ V, точно

    До frac_enum_max_nodes узлов — перебор масок (эталон),
    дальше — Stoer–Wagner (неориентированный) или потоки (орграф).
    """
    _require_two_nodes(g)
    x = frac_vector(g, x)
    config = resolve(config)

    if g.n <= config.frac_enum_max_nodes:
        value, side = _enumerate_min_cut(g, x)
    elif g.directed:
        value, side = _flow_min_cut(g, x)
    else:
        value, side = _stoer_wagner_min_cut(g, x)

    logger.debug("fractional edge connectivity n=%d: %s", g.n, value)
    return ConnReport(kind=ConnKind.EDGE, value=value, witness=_cut_edges(g, side), side=side)
