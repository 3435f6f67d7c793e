"""
Maximum Connectivity m-Edge Subgraph

Максимальная связность при бюджете рёбер: ослабленный алгоритм
запускается для k = 2, 3, …, κ(G) и берётся наибольшее k − 1,
чей результат укладывается в m рёбер. Гарантия: k_achieved >= k* − 1.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from ..config import SolverConfig
from ..connectivity.connectivity import node_connectivity
from ..errors import NotConnectedError, ParameterError
from ..graph.core import EdgeSet, MultiGraph
from .algorithm import kcs_relaxed, minimal_augmentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BudgetSolution:
    """
    Результат: H с |H| = m_used <= budget, (V, H) k_achieved-связен

    attempts: размер выхода ослабленного алгоритма для каждого
    проверенного уровня связности (ключ — достигнутая связность).
    """
    k_achieved: int
    edges: EdgeSet
    m_used: int
    budget: int
    attempts: Dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "k_achieved": self.k_achieved,
            "H": sorted(self.edges),
            "m_used": self.m_used,
            "budget": self.budget,
            "attempts": {str(k): size for k, size in sorted(self.attempts.items())},
        }


def min_budget(g: MultiGraph) -> int:
    """Наименьший бюджет, при котором связный остовный подграф возможен"""
    return g.n if g.directed else g.n - 1


def max_connectivity_m_edge_subgraph(
    g: MultiGraph,
    m: int,
    config: Optional[SolverConfig] = None
) -> BudgetSolution:
    """
    Остовный подграф не больше чем с m рёбрами и связностью >= k* − 1

    Размер выхода не доказан монотонным по k, поэтому проверяются
    все уровни до κ(G) и берётся наибольший подходящий.

    Raises:
        ParameterError: m меньше n − 1 (орграф: n)
        NotConnectedError: G не связен (не сильно связен)
    """
    if m < min_budget(g):
        raise ParameterError(
            f"Budget {m} is below any spanning connected subgraph (needs {min_budget(g)})"
        )
    report = node_connectivity(g)
    if report.value < 1:
        raise NotConnectedError("Input graph is not connected", report=report)

    attempts: Dict[int, int] = {}
    best_k = 0
    best: EdgeSet = frozenset()

    if report.value == 1:
        # kcs_relaxed определён только для k >= 2
        tree = minimal_augmentation(g, frozenset(), 1)
        attempts[1] = len(tree)
        if len(tree) <= m:
            best_k, best = 1, tree

    for k in range(2, report.value + 1):
        solution = kcs_relaxed(g, k, config)
        attempts[k - 1] = solution.total_size
        logger.debug("budget m=%d: k=%d gives %d edges", m, k, solution.total_size)
        if solution.total_size <= m and k - 1 >= best_k:
            best_k, best = k - 1, solution.edges

    return BudgetSolution(
        k_achieved=best_k,
        edges=best,
        m_used=len(best),
        budget=m,
        attempts=attempts,
    )
