"""
Polytope Tests

Тесты точной проверки принадлежности многогранникам
и теоремы о масштабировании.
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Добавляем путь к модулям
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config import SolverConfig
from src.cover import BoundCase
from src.errors import GraphError, HypothesisError, InstanceTooLargeError, ParameterError
from src.generators import complete_digraph, complete_graph, cycle_graph, harary, perturb_feasible
from src.graph import MultiGraph, ones, scale
from src.polytope import (
    check_scaling_identities,
    cover_polytope_verdict,
    in_frac_con,
    in_frac_cover,
    in_integral_cover_polytope,
    relaxed_factor,
    theorem1_mu,
    verify_bipartite_scaling,
    verify_theorem1,
)


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


class TestFracCon:
    """Тесты P^f_con(G, k)"""

    def test_triangle(self):
        """Тест треугольника: x ≡ 1 лежит в P^f_con(G, 2), но не в P^f_con(G, 3)"""
        g = complete_graph(3)
        assert in_frac_con(g, ones(g), 2).ok

        outside = in_frac_con(g, ones(g), 3)
        assert not outside.ok
        assert outside.value == 2
        assert outside.witness is not None

    def test_invalid_k(self):
        """Тест k < 1"""
        with pytest.raises(ParameterError):
            in_frac_con(complete_graph(3), ones(complete_graph(3)), 0)


class TestCoverPolytope:
    """Тесты описания P_cov(G, ℓ)"""

    def test_cover_indicator_is_member(self):
        """Тест: индикатор покрытия лежит в P_cov"""
        g = complete_graph(3)
        assert in_integral_cover_polytope(g, [1, 1, 0], 1).ok

    def test_degree_violation(self):
        """Тест нарушения степенного ограничения"""
        g = complete_graph(3)
        verdict = in_integral_cover_polytope(g, [1, 0, 0], 1)
        assert not verdict.ok
        assert verdict.violation.family == 1

    def test_odd_set_violation(self):
        """Тест: x ≡ 1/2 на треугольнике нарушает ограничение для S = V"""
        g = complete_graph(3)
        x = [Fraction(1, 2)] * 3
        assert in_frac_cover(g, x, 1).ok

        verdict = in_integral_cover_polytope(g, x, 1)
        assert not verdict.ok
        assert verdict.violation.family == 2
        assert verdict.violation.side == 0b111
        assert verdict.violation.lhs == Fraction(3, 2)
        assert verdict.violation.rhs == 2

    def test_proper_subsets_only(self):
        """Тест: без S = V тот же вектор проходит"""
        g = complete_graph(3)
        x = [Fraction(1, 2)] * 3
        assert cover_polytope_verdict(g, x, 1, proper_only=True).ok

    def test_tight_constraints_recorded(self):
        """Тест тугих ограничений"""
        g = complete_graph(3)
        verdict = in_integral_cover_polytope(g, [Fraction(2, 3)] * 3, 1)
        assert verdict.ok
        tight = [c for c in verdict.tight_constraints if c.side == 0b111]
        assert tight and tight[0].slack == 0

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_exhaustive_agrees_with_prefix(self, seed):
        """Тест: перебор всех F и минимум по префиксам дают один вердикт"""
        g = complete_graph(5)
        x = perturb_feasible(g, ones(g), 3, seed)
        for factor in (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)):
            scaled = scale(x, factor)
            fast = in_integral_cover_polytope(g, scaled, 1)
            full = in_integral_cover_polytope(g, scaled, 1, exhaustive=True)
            assert fast.ok == full.ok

    def test_enumeration_cap(self):
        """Тест предела перебора"""
        g = complete_graph(4)
        with pytest.raises(InstanceTooLargeError):
            in_integral_cover_polytope(g, ones(g), 1, SolverConfig(enum_max_nodes=3))

    def test_exhaustive_cut_cap(self):
        """Тест предела |δ(S)| при полном переборе F"""
        g = complete_graph(5)
        with pytest.raises(InstanceTooLargeError):
            in_integral_cover_polytope(
                g, ones(g), 2, SolverConfig(enum_max_cut_edges=3), exhaustive=True
            )

    def test_directed_uses_degrees(self):
        """Тест орграфа: только исходящие и входящие степени"""
        g = complete_digraph(3)
        x = [Fraction(1, 2)] * g.m
        assert cover_polytope_verdict(g, x, 1).ok
        assert not cover_polytope_verdict(g, scale(x, Fraction(1, 2)), 1).ok


class TestScaleFactor:
    """Тесты множителя μ"""

    def test_triangle_odd_small(self):
        """Тест треугольника: μ = (ℓn+1)/(2x(E)) = 2/3"""
        factor = theorem1_mu(3, 2, 1, 3)
        assert factor.case is BoundCase.ODD_SMALL
        assert factor.mu == Fraction(2, 3)

    def test_even_case(self):
        """Тест: ℓn чётно, μ = ℓ/k"""
        factor = theorem1_mu(4, 3, 2, 6)
        assert factor.case is BoundCase.EVEN_OR_LARGE
        assert factor.mu == Fraction(2, 3)

    def test_large_total(self):
        """Тест: x(E) >= kn/2 + k/(2ℓ) даёт μ = ℓ/k"""
        assert theorem1_mu(5, 2, 1, 6).mu == Fraction(1, 2)
        assert theorem1_mu(5, 2, 1, 5).mu == Fraction(3, 5)

    def test_mu_within_relaxed(self):
        """Тест: μ <= ℓ/k + 1/(kn)"""
        for n, k, ell, x_total in [(3, 2, 1, 3), (5, 4, 1, 10), (7, 3, 1, 11), (5, 2, 1, 5)]:
            assert theorem1_mu(n, k, ell, x_total).mu <= relaxed_factor(n, k, ell)

    def test_total_below_half_kn(self):
        """Тест x(E) < kn/2"""
        with pytest.raises(ParameterError):
            theorem1_mu(4, 3, 1, 5)

    def test_ell_out_of_range(self):
        """Тест ℓ вне [1, k−1]"""
        with pytest.raises(ParameterError):
            theorem1_mu(4, 2, 2, 4)


class TestVerifyTheorem1:
    """Тесты полной проверки масштабирования"""

    def test_triangle(self):
        """Тест треугольника, k = 2, ℓ = 1"""
        g = complete_graph(3)
        report = verify_theorem1(g, ones(g), 2, 1)
        assert report.ok
        assert report.scale.mu == Fraction(2, 3)
        assert report.relaxed_factor == Fraction(2, 3)

    @pytest.mark.parametrize("ell", [1, 2, 3])
    def test_k5(self, ell):
        """Тест K5, k = 4"""
        g = complete_graph(5)
        assert verify_theorem1(g, ones(g), 4, ell).ok

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_perturbed_vectors(self, seed):
        """Тест дробных векторов из P^f_con(G, 3)"""
        g = harary(3, 7)
        x = perturb_feasible(g, ones(g), 3, seed)
        for ell in (1, 2):
            report = verify_theorem1(g, x, 3, ell)
            assert report.ok, report.summary()

    def test_hypothesis_failure(self):
        """Тест: x вне P^f_con(G, k), со свидетелем"""
        g = cycle_graph(5)
        with pytest.raises(HypothesisError) as info:
            verify_theorem1(g, ones(g), 3, 1)
        assert info.value.value == 2
        assert info.value.witness

    def test_directed_rejected(self):
        """Тест: теорема сформулирована для неориентированных графов"""
        g = complete_digraph(3)
        with pytest.raises(GraphError):
            verify_theorem1(g, ones(g), 2, 1)


class TestBipartiteScaling:
    """Тесты двудольного случая"""

    def test_complete_bipartite(self):
        """Тест K_{3,3}, k = 3, ℓ = 2"""
        g = complete_bipartite(3, 3)
        report = verify_bipartite_scaling(g, ones(g), 3, 2)
        assert report.ok
        assert report.enumerated is not None

    def test_directed_via_double(self):
        """Тест полного орграфа через двудольный дубль"""
        g = complete_digraph(4)
        report = verify_bipartite_scaling(g, ones(g), 3, 1)
        assert report.ok
        assert report.enumerated is None

    def test_odd_cycle_rejected(self):
        """Тест недвудольного графа"""
        g = complete_graph(3)
        with pytest.raises(GraphError):
            verify_bipartite_scaling(g, ones(g), 2, 1)

    def test_hypothesis_failure(self):
        """Тест: x вне P^f_cov(G, k)"""
        g = complete_bipartite(2, 2)
        with pytest.raises(HypothesisError):
            verify_bipartite_scaling(g, ones(g), 3, 1)


class TestScalingIdentities:
    """Тесты промежуточных соотношений"""

    @pytest.mark.parametrize("k,n,ell", [(2, 5, 1), (3, 7, 1), (3, 7, 2), (4, 8, 3)])
    def test_harary(self, k, n, ell):
        """Тест соотношений на графах Харари"""
        g = harary(k, n)
        report = check_scaling_identities(g, ones(g), k, ell)
        assert report.zeta_identity
        assert report.zeta_bound
        assert report.pivotal
        assert report.ok

    def test_perturbed(self):
        """Тест на возмущённом векторе"""
        g = harary(3, 6)
        x = perturb_feasible(g, ones(g), 3, seed=9)
        assert check_scaling_identities(g, x, 3, 2).ok
