"""
Max Flow

Точный максимальный поток (Edmonds–Karp) на остаточной сети.
Пропускные способности — int или Fraction, плавающей точки нет.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import List, Optional, Sequence, Union

from ..errors import GraphError
from ..graph.core import MultiGraph, as_mask

Number = Union[int, Fraction]


class FlowNetwork:
    """
    Остаточная сеть

    Дуга 2i — прямая, 2i+1 — обратная к ней (head[a ^ 1] — хвост дуги a).
    """

    def __init__(self, size: int):
        self.size = size
        self.head: List[int] = []
        self.cap: List[Number] = []
        self.adj: List[List[int]] = [[] for _ in range(size)]

    def add_arc(self, u: int, v: int, cap: Number, rev_cap: Number = 0) -> int:
        """Добавить дугу u→v (и обратную с ёмкостью rev_cap). Возвращает id прямой дуги."""
        arc = len(self.head)
        self.head.append(v)
        self.cap.append(cap)
        self.adj[u].append(arc)
        self.head.append(u)
        self.cap.append(rev_cap)
        self.adj[v].append(arc + 1)
        return arc

    def tail(self, arc: int) -> int:
        return self.head[arc ^ 1]

    def _augmenting_path(self, s: int, t: int) -> Optional[List[int]]:
        parent_arc = [-1] * self.size
        seen = [False] * self.size
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for arc in self.adj[u]:
                v = self.head[arc]
                if not seen[v] and self.cap[arc] > 0:
                    seen[v] = True
                    parent_arc[v] = arc
                    if v == t:
                        path = []
                        while v != s:
                            path.append(parent_arc[v])
                            v = self.tail(parent_arc[v])
                        return path
                    queue.append(v)
        return None

    def max_flow(self, s: int, t: int, limit: Optional[Number] = None) -> Number:
        """
        Поток из s в t кратчайшими увеличивающими путями

        Args:
            limit: Остановиться, как только поток достиг limit (ранний выход)
        """
        value: Number = 0
        while limit is None or value < limit:
            path = self._augmenting_path(s, t)
            if path is None:
                break
            push = min(self.cap[arc] for arc in path)
            if limit is not None:
                push = min(push, limit - value)
            for arc in path:
                self.cap[arc] -= push
                self.cap[arc ^ 1] += push
            value += push
        return value

    def reachable(self, s: int) -> List[bool]:
        """Узлы, достижимые из s по дугам с положительной остаточной ёмкостью"""
        seen = [False] * self.size
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for arc in self.adj[u]:
                v = self.head[arc]
                if not seen[v] and self.cap[arc] > 0:
                    seen[v] = True
                    queue.append(v)
        return seen


@dataclass(frozen=True)
class FlowResult:
    """Значение потока и сторона s минимального разреза (битовая маска)"""
    value: Fraction
    mincut: int

    @property
    def is_integral(self) -> bool:
        return self.value.denominator == 1


def _check_capacities(g: MultiGraph, cap: Optional[Sequence[Number]]) -> List[Number]:
    if cap is None:
        return [1] * g.m
    if len(cap) != g.m:
        raise GraphError(f"Capacity vector has {len(cap)} entries, graph has {g.m} edges")
    values = []
    for idx, c in enumerate(cap):
        if not isinstance(c, Rational):
            raise GraphError(f"Capacity of edge {idx} must be an exact rational, got {c!r}")
        if c < 0:
            raise GraphError(f"Capacity of edge {idx} is negative: {c}")
        values.append(c if isinstance(c, int) else Fraction(c))
    return values


def cut_capacity(g: MultiGraph, cap: Sequence[Number], mask: int) -> Number:
    """Ёмкость разреза (S, V∖S): для орграфа — только дуги из S"""
    total: Number = 0
    for idx, (u, v) in enumerate(g.edges):
        in_u = (mask >> u) & 1
        in_v = (mask >> v) & 1
        if in_u and not in_v:
            total += cap[idx]
        elif in_v and not in_u and not g.directed:
            total += cap[idx]
    return total


def max_flow(
    g: MultiGraph,
    cap: Optional[Sequence[Number]],
    s: int,
    t: int,
    limit: Optional[Number] = None
) -> FlowResult:
    """
    Максимальный s–t поток в мультиграфе

    Неориентированное ребро пропускает поток в обе стороны с ёмкостью c.
    Возвращает значение и минимальный разрез; их равенство проверяется.

    Args:
        cap: Ёмкости рёбер (None = единичные)
        limit: Ранний выход по достижении значения (разрез тогда не минимален)
    """
    s_mask = as_mask(g, [s])
    as_mask(g, [t])
    if s == t:
        raise GraphError("Source and sink must differ")

    capacities = _check_capacities(g, cap)
    network = FlowNetwork(g.n)
    for idx, (u, v) in enumerate(g.edges):
        network.add_arc(u, v, capacities[idx], 0 if g.directed else capacities[idx])

    value = network.max_flow(s, t, limit)
    seen = network.reachable(s)
    mask = sum(1 << v for v in range(g.n) if seen[v]) | s_mask

    if limit is None or value < limit:
        if cut_capacity(g, capacities, mask) != value:
            raise RuntimeError("max-flow/min-cut certificate mismatch")

    return FlowResult(value=Fraction(value), mincut=mask)
