"""
Instance Commands

Команды CLI над экземпляром: решатели, проверки и оракулы.
Каждая возвращает результаты и словарь проверок (verdicts);
невыполненная проверка даёт код выхода 1.
"""

from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

from ..config import SolverConfig
from ..connectivity.connectivity import (
    edge_connectivity,
    is_k_connected,
    node_connectivity,
)
from ..cover.bounds import (
    cheriyan_thurimella_bound,
    bipartite_cover_bound,
    corollary3_bound,
)
from ..cover.edge_cover import (
    CoverSpec,
    cover_cost,
    is_edge_cover,
    min_cost_edge_cover,
    min_size_edge_cover,
)
from ..errors import ParameterError
from ..formats.graph_file import parse_vector
from ..graph.core import MultiGraph, bipartite_double, is_bipartite
from ..graph.vectors import ones, unit_costs
from ..kcs.algorithm import KcsSolution, algorithm1, kcs_relaxed
from ..kcs.budget import max_connectivity_m_edge_subgraph
from ..oracle.brute import brute_max_conn_m_edges, brute_min_cost_edge_cover, brute_opt_kcs
from ..polytope.scaling import check_scaling_identities, verify_bipartite_scaling, verify_theorem1
from .base import InstanceCommand

Outcome = Tuple[Dict[str, Any], Dict[str, bool]]


class CoverCommand(InstanceCommand):
    """
    Минимальное ℓ-покрытие (по размеру или по стоимости) и его оценки

    С заданным k проверяются оценки для k-рёберно-связных графов,
    двудольных графов и орграфов (через двудольный дубль), а при
    ℓ = k − 1 — оценка |E| − ⌊n/2⌋.
    """

    def __init__(
        self,
        ell: int,
        k: Optional[int] = None,
        use_costs: bool = False,
        config: Optional[SolverConfig] = None
    ):
        super().__init__("cover-cost" if use_costs else "cover", config)
        self.ell = ell
        self.k = k
        self.use_costs = use_costs

    def execute(self, g: MultiGraph, c: Optional[Sequence[Fraction]]) -> Outcome:
        if self.use_costs and c is None:
            raise ParameterError(f"{self.name}: graph file has no edge costs")
        spec = CoverSpec.for_graph(g, self.ell)
        costs = c if self.use_costs else unit_costs(g)

        if self.use_costs:
            cover = min_cost_edge_cover(g, costs, spec, self.config)
        else:
            cover = min_size_edge_cover(g, spec)
        value = cover_cost(costs, cover)

        outputs: Dict[str, Any] = {
            "l": self.ell,
            "I": cover,
            "size": len(cover),
            "cost": value,
        }
        verdicts = {"is_cover": is_edge_cover(g, cover, spec)}
        if self.k is None:
            return outputs, verdicts

        outputs["k"] = self.k
        if g.directed:
            bound = bipartite_cover_bound(bipartite_double(g).graph, costs, self.k, self.ell)
            outputs["bipartite_bound"] = bound
            verdicts["bipartite_bound"] = value <= bound.value
            return outputs, verdicts

        bound = corollary3_bound(g, costs, self.k, self.ell)
        outputs["bound"] = bound
        verdicts["bound"] = value <= bound.value
        verdicts["relaxed_bound"] = value <= bound.relaxed_value

        if is_bipartite(g) and min(g.degrees()) >= self.k:
            bipartite = bipartite_cover_bound(g, costs, self.k, self.ell)
            outputs["bipartite_bound"] = bipartite
            verdicts["bipartite_bound"] = value <= bipartite.value

        if self.ell == self.k - 1 and not self.use_costs:
            size_bound = cheriyan_thurimella_bound(g)
            outputs["size_bound"] = size_bound
            verdicts["size_bound"] = len(cover) <= size_bound
        return outputs, verdicts


def _is_minimal(g: MultiGraph, solution: KcsSolution) -> bool:
    edges = solution.edges
    return all(not is_k_connected(g.restrict(edges - {e}), solution.k) for e in solution.augmentation)


def _solution_verdicts(g: MultiGraph, solution: KcsSolution) -> Dict[str, bool]:
    verdicts = {
        "connected": is_k_connected(g.restrict(solution.edges), solution.k),
        "disjoint": not (solution.cover & solution.augmentation),
        "forest": solution.forest_ok,
        "forest_size": len(solution.augmentation) <= solution.forest_limit,
        "minimal": _is_minimal(g, solution),
    }
    for name, holds in solution.ratio_certificates.holds.items():
        verdicts[f"ratio_{name}"] = holds
    return verdicts


class KcsCommand(InstanceCommand):
    """
    Покрытие-затем-дополнение для k-связного остовного подграфа

    oracle=True подставляет точный opt: по размеру без стоимостей,
    по стоимости при заданном β (β-метрические экземпляры).
    """

    def __init__(
        self,
        k: int,
        oracle: bool = False,
        beta: Optional[Fraction] = None,
        config: Optional[SolverConfig] = None
    ):
        super().__init__("kcs", config)
        self.k = k
        self.oracle = oracle
        self.beta = None if beta is None else Fraction(beta)

    def execute(self, g: MultiGraph, c: Optional[Sequence[Fraction]]) -> Outcome:
        solution = algorithm1(g, self.k, c, self.config)

        if self.oracle and c is None:
            opt, _ = brute_opt_kcs(g, self.k, config=self.config)
            solution = solution.certify(opt)
        elif self.oracle and self.beta is not None:
            opt, _ = brute_opt_kcs(g, self.k, c, self.config)
            solution = solution.certify(opt, self.beta)

        return {"solution": solution}, _solution_verdicts(g, solution)


class KcsRelaxedCommand(InstanceCommand):
    """(k−1)-связный подграф не больше чем с opt(k) рёбрами"""

    def __init__(self, k: int, oracle: bool = False, config: Optional[SolverConfig] = None):
        super().__init__("kcs-relaxed", config)
        self.k = k
        self.oracle = oracle

    def execute(self, g: MultiGraph, c: Optional[Sequence[Fraction]]) -> Outcome:
        solution = kcs_relaxed(g, self.k, self.config)
        if self.oracle:
            opt, _ = brute_opt_kcs(g, self.k, config=self.config)
            solution = solution.certify(opt)
        return {"solution": solution}, _solution_verdicts(g, solution)


class MaxConnCommand(InstanceCommand):
    """Максимальная связность не больше чем с m рёбрами"""

    def __init__(self, m: int, oracle: bool = False, config: Optional[SolverConfig] = None):
        super().__init__("max-conn", config)
        self.m = m
        self.oracle = oracle

    def execute(self, g: MultiGraph, c: Optional[Sequence[Fraction]]) -> Outcome:
        solution = max_connectivity_m_edge_subgraph(g, self.m, self.config)
        outputs: Dict[str, Any] = {"solution": solution}

        verdicts = {"within_budget": solution.m_used <= self.m}
        if solution.k_achieved >= 1:
            verdicts["connected"] = is_k_connected(g.restrict(solution.edges), solution.k_achieved)

        if self.oracle:
            k_star = brute_max_conn_m_edges(g, self.m, self.config)
            outputs["k_star"] = k_star
            verdicts["guarantee"] = solution.k_achieved >= k_star - 1
        return outputs, verdicts


class ConnCommand(InstanceCommand):
    """Рёберная и узловая связность с разрезами-свидетелями"""

    def __init__(self, config: Optional[SolverConfig] = None):
        super().__init__("conn", config)

    def execute(self, g: MultiGraph, c: Optional[Sequence[Fraction]]) -> Outcome:
        return {"edge": edge_connectivity(g), "node": node_connectivity(g)}, {}


class VerifyTheorem1Command(InstanceCommand):
    """
    Масштабирование x ∈ P^f_con(G, k) в P_cov(G, ℓ)

    x — единичный вектор или вектор из файла; орграф проверяется
    через двудольный дубль.
    """

    def __init__(
        self,
        k: int,
        ell: int,
        x_text: Optional[str] = None,
        exhaustive: bool = False,
        config: Optional[SolverConfig] = None
    ):
        super().__init__("verify-thm1", config)
        self.k = k
        self.ell = ell
        self.x_text = x_text
        self.exhaustive = exhaustive

    def execute(self, g: MultiGraph, c: Optional[Sequence[Fraction]]) -> Outcome:
        x = ones(g) if self.x_text is None else parse_vector(self.x_text, g.m)

        if g.directed:
            report = verify_bipartite_scaling(g, x, self.k, self.ell, self.config)
            return {"bipartite": report}, {"bipartite_scaling": report.ok}

        report = verify_theorem1(g, x, self.k, self.ell, self.config, self.exhaustive)
        identities = check_scaling_identities(g, x, self.k, self.ell, self.config)
        outputs = {
            "mu": report.scale.mu,
            "case": report.scale.case,
            "report": report,
            "identities": identities,
        }
        verdicts = {
            "membership": report.verdict.ok,
            "relaxed_membership": report.relaxed_verdict.ok,
            "proper_subsets": report.proper_verdict.ok,
            "mu_within_relaxed": report.mu_within_relaxed,
            "identities": identities.ok,
        }
        return outputs, verdicts


class OracleCoverCommand(InstanceCommand):
    """Минимальное ℓ-покрытие полным перебором"""

    def __init__(self, ell: int, config: Optional[SolverConfig] = None):
        super().__init__("oracle-cover", config)
        self.ell = ell

    def execute(self, g: MultiGraph, c: Optional[Sequence[Fraction]]) -> Outcome:
        costs = unit_costs(g) if c is None else c
        cost, witness = brute_min_cost_edge_cover(g, costs, CoverSpec.for_graph(g, self.ell), self.config)
        return {"cost": cost, "witness": witness}, {}


class OracleKcsCommand(InstanceCommand):
    """opt для k-связного остовного подграфа полным перебором"""

    def __init__(self, k: int, config: Optional[SolverConfig] = None):
        super().__init__("oracle-kcs", config)
        self.k = k

    def execute(self, g: MultiGraph, c: Optional[Sequence[Fraction]]) -> Outcome:
        opt, witness = brute_opt_kcs(g, self.k, c, self.config)
        return {"opt": opt, "witness": witness}, {}


class OracleMaxConnCommand(InstanceCommand):
    """k* при бюджете m полным перебором"""

    def __init__(self, m: int, config: Optional[SolverConfig] = None):
        super().__init__("oracle-max-conn", config)
        self.m = m

    def execute(self, g: MultiGraph, c: Optional[Sequence[Fraction]]) -> Outcome:
        return {"k_star": brute_max_conn_m_edges(g, self.m, self.config)}, {}
