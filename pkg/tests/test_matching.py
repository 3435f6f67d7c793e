"""
Matching Tests

Тесты потоков, паросочетаний, b-паросочетаний и min-cost покрытий
двудольных графов. Эталоны: networkx и полный перебор.
"""

import sys
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Dict, FrozenSet

import networkx as nx
import pytest

# Добавляем путь к модулям
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import GraphError
from src.generators import (
    complete_digraph,
    complete_graph,
    cycle_graph,
    petersen_graph,
    random_costs,
    random_k_edge_connected,
)
from src.graph import CutMode, MultiGraph, delta
from src.matching import (
    build_gadget,
    bipartite_max_b_matching,
    max_b_matching,
    max_flow,
    max_matching,
    min_cost_bipartite_b_edge_cover,
    tutte_berge_witness,
)


def brute_b_matching_size(g: MultiGraph, b) -> int:
    """Наибольшее подмножество рёбер со степенями <= b"""
    for size in range(g.m, -1, -1):
        for ids in combinations(g.edge_ids, size):
            deg = [0] * g.n
            for e in ids:
                u, v = g.edges[e]
                deg[u] += 1
                deg[v] += 1
            if all(d <= cap for d, cap in zip(deg, b)):
                return size
    return 0


def is_b_matching(g: MultiGraph, ids, b) -> bool:
    deg = [0] * g.n
    for e in ids:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    return all(d <= cap for d, cap in zip(deg, b))


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def max_disjoint_paths(g: MultiGraph, s: int, t: int) -> int:
    """Наибольшее число рёберно-непересекающихся s–t путей: снимаем путь и перебираем все выборы"""
    memo: Dict[FrozenSet[int], int] = {}

    def paths(used: FrozenSet[int]):
        stack = [(s, 1 << s, ())]
        while stack:
            node, seen, path = stack.pop()
            if node == t:
                yield path
                continue
            for e in g.incidence[node]:
                if e in used:
                    continue
                u, v = g.edges[e]
                if g.directed and u != node:
                    continue
                nxt = v if u == node else u
                if not (seen >> nxt) & 1:
                    stack.append((nxt, seen | (1 << nxt), path + (e,)))

    def best(used: FrozenSet[int]) -> int:
        if used not in memo:
            memo[used] = max((1 + best(used | set(p)) for p in paths(used)), default=0)
        return memo[used]

    return best(frozenset())


class TestMaxFlow:
    """Тесты максимального потока"""

    def test_unit_capacities(self):
        """Тест потока в треугольнике"""
        g = complete_graph(3)
        result = max_flow(g, None, 0, 2)
        assert result.value == 2
        assert result.mincut & 1
        assert not (result.mincut >> 2) & 1

    def test_fractional_capacities(self):
        """Тест точного рационального потока"""
        g = MultiGraph.from_edges(3, [(0, 1), (1, 2)])
        result = max_flow(g, [Fraction(1, 2), Fraction(1, 3)], 0, 2)
        assert result.value == Fraction(1, 3)
        assert not result.is_integral

    def test_directed_flow_follows_arcs(self):
        """Тест: дуги пропускают поток только вперёд"""
        g = MultiGraph.from_edges(2, [(1, 0)], directed=True)
        assert max_flow(g, None, 0, 1).value == 0
        assert max_flow(g, None, 1, 0).value == 1

    def test_source_equals_sink(self):
        """Тест совпадения источника и стока"""
        with pytest.raises(GraphError):
            max_flow(complete_graph(3), None, 1, 1)

    def test_value_counts_disjoint_paths(self):
        """Тест: поток с единичными ёмкостями = число рёберно-непересекающихся путей = разрез"""
        graphs = [complete_graph(4), cycle_graph(5), complete_digraph(4)] + [
            random_k_edge_connected(5, 2, 2, seed, directed=directed)
            for seed in range(3) for directed in (False, True)
        ]
        for g in graphs:
            mode = CutMode.LEAVING if g.directed else CutMode.ALL
            for s, t in ((0, g.n - 1), (1, 2)):
                result = max_flow(g, None, s, t)
                assert result.value == max_disjoint_paths(g, s, t)
                assert len(delta(g, result.mincut, mode)) == result.value


class TestMaxMatching:
    """Тесты паросочетания (сравнение с networkx)"""

    def test_petersen_perfect_matching(self):
        """Тест совершенного паросочетания графа Петерсена"""
        matching = max_matching(petersen_graph())
        assert len(matching) == 5

    def test_odd_cycle(self):
        """Тест нечётного цикла (нужны цветки)"""
        assert len(max_matching(cycle_graph(7))) == 3

    @pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
    def test_matches_networkx(self, seed):
        """Тест размера против networkx на случайных графах"""
        g = random_k_edge_connected(9, 2, 8, seed, simple=True)
        reference = nx.Graph()
        reference.add_nodes_from(range(g.n))
        reference.add_edges_from(g.edges)

        expected = len(nx.max_weight_matching(reference, maxcardinality=True))
        matching = max_matching(g)
        assert len(matching) == expected

        covered = [v for e in matching for v in g.edges[e]]
        assert len(covered) == len(set(covered))

    def test_parallel_edges_pick_smallest_id(self):
        """Тест детерминированного выбора среди параллельных рёбер"""
        g = MultiGraph.from_edges(2, [(0, 1), (0, 1)])
        assert max_matching(g) == frozenset({0})

    def test_tutte_berge_certificate(self):
        """Тест свидетеля оптимальности"""
        for g in (petersen_graph(), cycle_graph(5), complete_graph(4)):
            certificate = tutte_berge_witness(g)
            assert certificate.is_optimal


class TestBMatching:
    """Тесты b-паросочетания через гаджет и через поток"""

    def test_gadget_size(self):
        """Тест размера гаджета"""
        g = complete_graph(3)
        gadget = build_gadget(g, [1, 1, 1])
        assert gadget.copy_count == 3
        assert gadget.graph.n == 3 + 2 * g.m

    def test_two_matching_of_k4(self):
        """Тест 2-паросочетания K4 (гамильтонов цикл)"""
        ids = max_b_matching(complete_graph(4), [2, 2, 2, 2])
        assert len(ids) == 4

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_against_brute_force(self, seed):
        """Тест против перебора на мультиграфах, b = deg − 1"""
        g = random_k_edge_connected(5, 2, 5, seed)
        b = [d - 1 for d in g.degrees()]

        ids = max_b_matching(g, b)
        assert is_b_matching(g, ids, b)
        assert len(ids) == brute_b_matching_size(g, b)

    def test_zero_bound(self):
        """Тест b ≡ 0"""
        assert max_b_matching(complete_graph(4), [0, 0, 0, 0]) == frozenset()

    def test_negative_bound_rejected(self):
        """Тест отрицательного b"""
        with pytest.raises(GraphError):
            max_b_matching(complete_graph(3), [1, -1, 1])

    def test_bipartite_flow_agrees(self):
        """Тест двудольного решателя против общего"""
        g = complete_bipartite(3, 4)
        b = [2, 3, 1, 1, 2, 1, 2]
        flow_ids = bipartite_max_b_matching(g, b)
        assert is_b_matching(g, flow_ids, b)
        assert len(flow_ids) == len(max_b_matching(g, b))

    def test_bipartite_solver_rejects_odd_cycle(self):
        """Тест: поток только для двудольных графов"""
        with pytest.raises(GraphError):
            bipartite_max_b_matching(complete_graph(3), [1, 1, 1])


class TestMinCostBipartiteCover:
    """Тесты min-cost b-покрытия двудольного графа"""

    @pytest.mark.parametrize("ell,seed", [(1, 0), (1, 1), (2, 2), (2, 3)])
    def test_against_brute_force(self, ell, seed):
        """Тест стоимости против перебора на K_{3,3}"""
        g = complete_bipartite(3, 3)
        costs = random_costs(g, seed)
        ids = min_cost_bipartite_b_edge_cover(g, costs, [ell] * g.n)

        deg = [0] * g.n
        for e in ids:
            u, v = g.edges[e]
            deg[u] += 1
            deg[v] += 1
        assert min(deg) >= ell

        best = None
        for size in range(g.m + 1):
            for subset in combinations(g.edge_ids, size):
                sub_deg = [0] * g.n
                for e in subset:
                    u, v = g.edges[e]
                    sub_deg[u] += 1
                    sub_deg[v] += 1
                if min(sub_deg) >= ell:
                    cost = sum((costs[e] for e in subset), Fraction(0))
                    best = cost if best is None else min(best, cost)
        assert sum((costs[e] for e in ids), Fraction(0)) == best
