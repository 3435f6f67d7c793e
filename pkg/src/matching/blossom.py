"""
Blossom Matching

Максимальное паросочетание в произвольном графе (алгоритм Эдмондса
со сжатием цветков) и свидетель оптимальности Татта–Бержа.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..errors import GraphError
from ..graph.core import EdgeSet, MultiGraph


class _Blossom:
    """Поиск увеличивающих путей из одного свободного корня"""

    def __init__(self, n: int, adj: List[List[int]]):
        self.n = n
        self.adj = adj
        self.match = [-1] * n

    def greedy_init(self):
        for v in range(self.n):
            if self.match[v] != -1:
                continue
            for w in self.adj[v]:
                if self.match[w] == -1:
                    self.match[v] = w
                    self.match[w] = v
                    break

    def _lca(self, a: int, b: int) -> int:
        seen = [False] * self.n
        while True:
            a = self.base[a]
            seen[a] = True
            if self.match[a] == -1:
                break
            a = self.parent[self.match[a]]
        while True:
            b = self.base[b]
            if seen[b]:
                return b
            b = self.parent[self.match[b]]

    def _mark_path(self, v: int, b: int, child: int):
        while self.base[v] != b:
            self.in_blossom[self.base[v]] = True
            self.in_blossom[self.base[self.match[v]]] = True
            self.parent[v] = child
            child = self.match[v]
            v = self.parent[self.match[v]]

    def _find_path(self, root: int) -> int:
        n = self.n
        used = [False] * n
        self.parent = [-1] * n
        self.base = list(range(n))
        used[root] = True
        queue = deque([root])

        while queue:
            v = queue.popleft()
            for to in self.adj[v]:
                if self.base[v] == self.base[to] or self.match[v] == to:
                    continue
                if to == root or (self.match[to] != -1 and self.parent[self.match[to]] != -1):
                    # Нечётный цикл: сжимаем цветок
                    cur_base = self._lca(v, to)
                    self.in_blossom = [False] * n
                    self._mark_path(v, cur_base, to)
                    self._mark_path(to, cur_base, v)
                    for i in range(n):
                        if self.in_blossom[self.base[i]]:
                            self.base[i] = cur_base
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif self.parent[to] == -1:
                    self.parent[to] = v
                    if self.match[to] == -1:
                        return to
                    used[self.match[to]] = True
                    queue.append(self.match[to])
        return -1

    def solve(self) -> List[int]:
        self.greedy_init()
        for root in range(self.n):
            if self.match[root] != -1:
                continue
            end = self._find_path(root)
            # Чередуем рёбра вдоль найденного пути
            v = end
            while v != -1:
                pv = self.parent[v]
                ppv = self.match[pv]
                self.match[v] = pv
                self.match[pv] = v
                v = ppv
        return self.match


def _simple_adjacency(g: MultiGraph) -> Tuple[List[List[int]], Dict[Tuple[int, int], int]]:
    """Списки соседей без кратностей и минимальный EdgeId для каждой пары"""
    adj: List[List[int]] = [[] for _ in range(g.n)]
    first_edge: Dict[Tuple[int, int], int] = {}
    for idx, (u, v) in enumerate(g.edges):
        if (u, v) in first_edge:
            continue
        first_edge[(u, v)] = idx
        adj[u].append(v)
        adj[v].append(u)
    return adj, first_edge


def max_matching(g: MultiGraph) -> EdgeSet:
    """
    Паросочетание максимальной мощности

    Из параллельных рёбер выбирается ребро с наименьшим id,
    поэтому результат детерминирован.
    """
    if g.directed:
        raise GraphError("max_matching expects an undirected graph")

    adj, first_edge = _simple_adjacency(g)
    match = _Blossom(g.n, adj).solve()

    result = set()
    for u in range(g.n):
        w = match[u]
        if w > u:
            result.add(first_edge[(u, w)])
    return frozenset(result)


def odd_components(g: MultiGraph, removed: int) -> int:
    """Число нечётных компонент G − A (A — битовая маска)"""
    seen = [bool((removed >> v) & 1) for v in range(g.n)]
    odd = 0
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        size = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            size += 1
            for idx in g.incidence[u]:
                w = g.other_end(idx, u)
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        odd += size % 2
    return odd


def tutte_berge_bound(g: MultiGraph, barrier: int) -> int:
    """Верхняя оценка ν(G) ≤ (n + |A| − odd(G − A)) / 2 для маски A"""
    size_a = bin(barrier).count("1")
    return (g.n + size_a - odd_components(g, barrier)) // 2


@dataclass(frozen=True)
class MatchingCertificate:
    """Паросочетание и множество Татта A, на котором оценка достигается"""
    matching: EdgeSet
    barrier: int
    bound: int

    @property
    def is_optimal(self) -> bool:
        return len(self.matching) == self.bound


def tutte_berge_witness(g: MultiGraph) -> MatchingCertificate:
    """
    Свидетель оптимальности по разложению Галлаи–Эдмондса

    D — узлы, пропускаемые некоторым максимальным паросочетанием,
    A = N(D) ∖ D. Для мелких графов: одно решение на узел.
    """
    matching = max_matching(g)
    nu = len(matching)

    in_d = []
    for v in range(g.n):
        rest = g.restrict(i for i in g.edge_ids if v not in g.edges[i])
        in_d.append(len(max_matching(rest)) == nu)

    barrier = 0
    for v in range(g.n):
        if in_d[v]:
            continue
        if any(in_d[g.other_end(idx, v)] for idx in g.incidence[v]):
            barrier |= 1 << v

    return MatchingCertificate(matching=matching, barrier=barrier, bound=tutte_berge_bound(g, barrier))
