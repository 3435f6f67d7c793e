"""
k-Connected Subgraph Module

Покрытие-затем-дополнение, ослабленный вариант и максимальная
связность при бюджете рёбер.
"""

from .algorithm import (
    KcsSolution,
    RatioCertificates,
    algorithm1,
    is_acyclic,
    kcs_relaxed,
    minimal_augmentation,
    ratio_bounds,
    size_lower_bound,
)
from .budget import BudgetSolution, max_connectivity_m_edge_subgraph, min_budget

__all__ = [
    # Algorithm
    "KcsSolution",
    "RatioCertificates",
    "minimal_augmentation",
    "algorithm1",
    "kcs_relaxed",
    "is_acyclic",
    # Certificates
    "ratio_bounds",
    "size_lower_bound",
    # Budget
    "BudgetSolution",
    "max_connectivity_m_edge_subgraph",
    "min_budget",
]
