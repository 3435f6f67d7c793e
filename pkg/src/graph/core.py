"""
Graph Core

Мультиграф (ориентированный или нет, с параллельными рёбрами),
запросы инцидентности δ(S), ζ(S), степени и двудольный дубль орграфа.

Идентичность ребра — его позиция в списке рёбер (EdgeId), а не пара концов:
параллельные рёбра различимы.
"""

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import AbstractSet, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from ..errors import GraphError

# Подмножество рёбер: множество EdgeId
EdgeSet = FrozenSet[int]

# Подмножество узлов: битовая маска или список/множество индексов
NodeSet = Union[int, Sequence[int], AbstractSet[int]]


class CutMode(Enum):
    """Режим запроса δ(S) для орграфов"""
    ALL = "all"            # обе ориентации
    LEAVING = "leaving"    # дуги из S наружу
    ENTERING = "entering"  # дуги снаружи в S


@dataclass(frozen=True)
class MultiGraph:
    """
    Мультиграф на узлах 0..n-1

    Рёбра хранятся упорядоченным кортежем пар (tail, head).
    Для неориентированного графа пара канонизируется: tail <= head.
    Петли запрещены.
    """
    n: int
    edges: Tuple[Tuple[int, int], ...] = ()
    directed: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"Node count must be >= 0, got {self.n}")

        canonical = []
        for idx, (u, v) in enumerate(self.edges):
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"Edge {idx} ({u}, {v}) has endpoint outside [0, {self.n})")
            if u == v:
                raise GraphError(f"Edge {idx} is a self-loop at node {u}")
            if not self.directed and u > v:
                u, v = v, u
            canonical.append((u, v))

        object.__setattr__(self, "edges", tuple(canonical))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        directed: bool = False
    ) -> "MultiGraph":
        return cls(n=n, edges=tuple(edges), directed=directed)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_nodes_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_ids(self) -> range:
        return range(len(self.edges))

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """incidence[v] — EdgeId всех рёбер, инцидентных v (в порядке id)"""
        buckets: List[List[int]] = [[] for _ in range(self.n)]
        for idx, (u, v) in enumerate(self.edges):
            buckets[u].append(idx)
            buckets[v].append(idx)
        return tuple(tuple(b) for b in buckets)

    def other_end(self, edge: int, node: int) -> int:
        u, v = self.edges[edge]
        return v if node == u else u

    def degree(self, v: int) -> int:
        self._check_node(v)
        return len(self.incidence[v])

    def degrees(self) -> List[int]:
        return [len(inc) for inc in self.incidence]

    def out_degrees(self) -> List[int]:
        result = [0] * self.n
        for u, _ in self.edges:
            result[u] += 1
        return result

    def in_degrees(self) -> List[int]:
        result = [0] * self.n
        for _, v in self.edges:
            result[v] += 1
        return result

    def restrict(self, edge_ids: Iterable[int]) -> "MultiGraph":
        """Остовный подграф (V, edge_ids). EdgeId перенумеровываются по возрастанию."""
        ids = sorted(edge_ids)
        return MultiGraph(self.n, tuple(self.edges[i] for i in ids), self.directed)

    def underlying_pairs(self) -> FrozenSet[Tuple[int, int]]:
        """Множество пар без кратностей (для узловой связности)"""
        return frozenset(self.edges)

    def _check_node(self, v: int):
        if not 0 <= v < self.n:
            raise GraphError(f"Node {v} outside [0, {self.n})")


def as_mask(g: MultiGraph, s: NodeSet) -> int:
    """Привести подмножество узлов к битовой маске с проверкой диапазона"""
    if isinstance(s, int) and not isinstance(s, bool):
        if s < 0 or s >> g.n:
            raise GraphError(f"Node mask {s:#x} has bits outside [0, {g.n})")
        return s

    mask = 0
    for v in s:
        g._check_node(v)
        mask |= 1 << v
    return mask


def mask_to_nodes(mask: int) -> List[int]:
    nodes = []
    v = 0
    while mask:
        if mask & 1:
            nodes.append(v)
        mask >>= 1
        v += 1
    return nodes


def delta(g: MultiGraph, s: NodeSet, mode: CutMode = CutMode.ALL) -> EdgeSet:
    """
    δ(S): рёбра ровно с одним концом в S

    Для орграфа mode выбирает обе ориентации, только выходящие
    или только входящие дуги.
    """
    mask = as_mask(g, s)
    result = []
    for idx, (u, v) in enumerate(g.edges):
        in_u = (mask >> u) & 1
        in_v = (mask >> v) & 1
        if in_u == in_v:
            continue
        if mode is CutMode.LEAVING and not in_u:
            continue
        if mode is CutMode.ENTERING and not in_v:
            continue
        result.append(idx)
    return frozenset(result)


def zeta(g: MultiGraph, s: NodeSet) -> EdgeSet:
    """ζ(S): рёбра хотя бы с одним концом в S"""
    mask = as_mask(g, s)
    return frozenset(
        idx for idx, (u, v) in enumerate(g.edges)
        if (mask >> u) & 1 or (mask >> v) & 1
    )


def inside(g: MultiGraph, s: NodeSet) -> EdgeSet:
    """Рёбра с обоими концами в S"""
    mask = as_mask(g, s)
    return frozenset(
        idx for idx, (u, v) in enumerate(g.edges)
        if (mask >> u) & 1 and (mask >> v) & 1
    )


def subset_degrees(g: MultiGraph, edge_ids: Iterable[int]) -> Tuple[List[int], List[int]]:
    """
    Степени в остовном подграфе (V, edge_ids)

    Returns:
        (out, in) для орграфа; для неориентированного обе компоненты
        равны обычной степени
    """
    out_deg = [0] * g.n
    in_deg = [0] * g.n
    for idx in edge_ids:
        u, v = g.edges[idx]
        out_deg[u] += 1
        in_deg[v] += 1
    if g.directed:
        return out_deg, in_deg
    total = [a + b for a, b in zip(out_deg, in_deg)]
    return total, total


def two_coloring(g: MultiGraph) -> Optional[List[int]]:
    """2-раскраска BFS-ом; None если граф не двудольный"""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for idx in g.incidence[u]:
                w = g.other_end(idx, u)
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: MultiGraph) -> bool:
    return two_coloring(g) is not None


@dataclass(frozen=True)
class BipartiteDouble:
    """
    Двудольный дубль орграфа

    Узлы 0..n-1 — оригиналы, n..2n-1 — копии V'.
    Ребро i дубля соответствует дуге i исходного графа.
    """
    graph: MultiGraph
    original: MultiGraph


def bipartite_double(g: MultiGraph) -> BipartiteDouble:
    """
    Заменить каждую дугу uv неориентированным ребром u·v'

    Исходящая степень v в g равна степени v в дубле,
    входящая — степени v'.
    """
    if not g.directed:
        raise GraphError("bipartite_double expects a directed graph")

    edges = tuple((u, g.n + v) for u, v in g.edges)
    double = MultiGraph(n=2 * g.n, edges=edges, directed=False)
    return BipartiteDouble(graph=double, original=g)
