"""
Connectivity Tests

Тесты рёберной, узловой и дробной связности против перебора и networkx.
"""

import sys
from fractions import Fraction
from pathlib import Path

import networkx as nx
import pytest

# Добавляем путь к модулям
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config import SolverConfig
from src.connectivity import (
    edge_connectivity,
    fractional_edge_connectivity,
    is_k_connected,
    is_strongly_connected,
    local_node_connectivity,
    node_connectivity,
)
from src.errors import GraphError
from src.generators import (
    complete_digraph,
    complete_graph,
    cycle_graph,
    harary,
    petersen_graph,
    random_k_edge_connected,
)
from src.graph import CutMode, MultiGraph, delta, ones
from src.oracle import brute_edge_connectivity, brute_node_connectivity


def to_networkx(g: MultiGraph) -> nx.Graph:
    graph = nx.DiGraph() if g.directed else nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges)
    return graph


class TestEdgeConnectivity:
    """Тесты λ(G) и разреза-свидетеля"""

    def test_cycle(self):
        """Тест цикла: λ = 2"""
        report = edge_connectivity(cycle_graph(6))
        assert report.value == 2
        assert len(report.witness) == 2

    def test_parallel_edges_count(self):
        """Тест: кратные рёбра увеличивают λ"""
        g = MultiGraph.from_edges(2, [(0, 1)] * 3)
        assert edge_connectivity(g).value == 3

    def test_witness_is_a_cut(self):
        """Тест: свидетель совпадает с δ(side)"""
        g = random_k_edge_connected(7, 3, 4, seed=11)
        report = edge_connectivity(g)
        assert report.witness == delta(g, report.side)
        assert len(report.witness) == report.value

    @pytest.mark.parametrize("seed", [0, 1, 2, 3, 4, 5])
    def test_against_brute_force(self, seed):
        """Тест против перебора разрезов"""
        g = random_k_edge_connected(7, 2, 5, seed)
        assert edge_connectivity(g).value == brute_edge_connectivity(g)

    def test_directed_against_brute_force(self):
        """Тест орграфа против перебора"""
        g = random_k_edge_connected(6, 2, 4, seed=3, directed=True)
        assert edge_connectivity(g).value == brute_edge_connectivity(g)

    def test_single_node_rejected(self):
        """Тест графа из одного узла"""
        with pytest.raises(GraphError):
            edge_connectivity(MultiGraph(1))


class TestNodeConnectivity:
    """Тесты κ(G) против networkx и перебора"""

    def test_petersen(self):
        """Тест графа Петерсена: κ = 3"""
        report = node_connectivity(petersen_graph())
        assert report.value == 3
        assert len(report.separator) == 3

    def test_complete_graph(self):
        """Тест полного графа: κ = n − 1, разделителя нет"""
        report = node_connectivity(complete_graph(5))
        assert report.value == 4
        assert report.witness == 0

    @pytest.mark.parametrize("k,n", [(2, 6), (3, 7), (4, 8), (3, 6)])
    def test_harary(self, k, n):
        """Тест графов Харари"""
        assert node_connectivity(harary(k, n)).value == k

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_against_networkx(self, seed):
        """Тест против networkx.node_connectivity"""
        g = random_k_edge_connected(8, 2, 6, seed, simple=True)
        assert node_connectivity(g).value == nx.node_connectivity(to_networkx(g))

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_against_brute_force(self, seed):
        """Тест против удаления всех подмножеств узлов"""
        g = random_k_edge_connected(6, 2, 5, seed)
        assert node_connectivity(g).value == brute_node_connectivity(g)

    def test_separator_disconnects(self):
        """Тест: удаление разделителя разъединяет пару"""
        g = cycle_graph(6)
        report = node_connectivity(g)
        s, t = report.pair
        value, _ = local_node_connectivity(g, s, t)
        assert value == 2
        assert all(v not in (s, t) for v in report.separator)

    def test_directed_cycle(self):
        """Тест ориентированного цикла"""
        g = MultiGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)], directed=True)
        assert node_connectivity(g).value == 1
        assert is_strongly_connected(g)
        assert not is_k_connected(g, 2)


class TestWhitneyInequality:
    """Тесты κ <= λ <= минимальной степени"""

    @pytest.mark.parametrize("directed", [False, True])
    def test_random_graphs(self, directed):
        """Тест на случайных мультиграфах"""
        for seed in range(8):
            g = random_k_edge_connected(7, 2, 5, seed, directed=directed)
            min_degree = min(g.out_degrees() + g.in_degrees()) if directed else min(g.degrees())
            assert node_connectivity(g).value <= edge_connectivity(g).value <= min_degree

    def test_fixed_families(self):
        """Тест на фиксированных графах, в том числе со строгими неравенствами"""
        bowtie = MultiGraph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        graphs = [petersen_graph(), harary(3, 8), cycle_graph(6), complete_graph(5), bowtie]
        for g in graphs:
            assert node_connectivity(g).value <= edge_connectivity(g).value <= min(g.degrees())
        assert (node_connectivity(bowtie).value, edge_connectivity(bowtie).value) == (1, 2)


class TestIsKConnected:
    """Тесты проверки k-связности"""

    def test_too_few_nodes(self):
        """Тест: k-связность требует n >= k + 1"""
        g = MultiGraph.from_edges(2, [(0, 1)] * 5)
        assert is_k_connected(g, 1)
        assert not is_k_connected(g, 2)

    def test_complete_digraph(self):
        """Тест полного орграфа"""
        g = complete_digraph(4)
        assert is_k_connected(g, 3)
        assert not is_k_connected(g, 4)

    def test_path_is_not_strongly_connected(self):
        """Тест ориентированного пути"""
        g = MultiGraph.from_edges(3, [(0, 1), (1, 2)], directed=True)
        assert not is_strongly_connected(g)

    def test_invalid_k(self):
        """Тест k < 1"""
        with pytest.raises(GraphError):
            is_k_connected(complete_graph(3), 0)


class TestFractionalConnectivity:
    """Тесты min x(δ(S))"""

    def test_ones_equals_edge_connectivity(self):
        """Тест x ≡ 1"""
        g = harary(3, 7)
        assert fractional_edge_connectivity(g, ones(g)).value == edge_connectivity(g).value

    def test_half_vector(self):
        """Тест x ≡ 1/2 на K4"""
        g = complete_graph(4)
        x = [Fraction(1, 2)] * g.m
        assert fractional_edge_connectivity(g, x).value == Fraction(3, 2)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_stoer_wagner_agrees_with_enumeration(self, seed):
        """Тест: Stoer–Wagner и перебор масок дают одно значение"""
        g = random_k_edge_connected(8, 3, 6, seed)
        x = [Fraction(1 + (e * 7) % 5, 6) for e in g.edge_ids]
        enumerated = fractional_edge_connectivity(g, x, SolverConfig(frac_enum_max_nodes=20))
        flow_based = fractional_edge_connectivity(g, x, SolverConfig(frac_enum_max_nodes=2))
        assert enumerated.value == flow_based.value

    def test_directed_flow_agrees_with_enumeration(self):
        """Тест орграфа: потоки и перебор"""
        g = random_k_edge_connected(6, 2, 4, seed=5, directed=True)
        x = [Fraction(1 + e % 3, 3) for e in g.edge_ids]
        enumerated = fractional_edge_connectivity(g, x, SolverConfig(frac_enum_max_nodes=20))
        flow_based = fractional_edge_connectivity(g, x, SolverConfig(frac_enum_max_nodes=2))
        assert enumerated.value == flow_based.value

    def test_default_threshold_enumerates_mid_size(self):
        """Тест n = 14: перебор по умолчанию совпадает со Stoer–Wagner"""
        g = harary(3, 14)
        x = [Fraction(2 + e % 3, 4) for e in g.edge_ids]
        enumerated = fractional_edge_connectivity(g, x)
        flow_based = fractional_edge_connectivity(g, x, SolverConfig(frac_enum_max_nodes=2))
        assert enumerated.value == flow_based.value
        assert 0 < enumerated.value <= 3

    @pytest.mark.parametrize("directed", [False, True])
    def test_enumeration_matches_direct_minimum(self, directed):
        """Тест: значение и сторона — минимум по всем маскам, наименьшая маска при равенстве"""
        g = random_k_edge_connected(6, 2, 3, seed=7, directed=directed)
        x = [Fraction(1 + e % 4, 3) for e in g.edge_ids]
        mode = CutMode.LEAVING if directed else CutMode.ALL
        masks = range(1, (1 << g.n) - 1) if directed else range(1, (1 << g.n) - 1, 2)
        expected = min((sum((x[e] for e in delta(g, mask, mode)), Fraction(0)), mask) for mask in masks)

        report = fractional_edge_connectivity(g, x)
        assert (report.value, report.side) == expected
