"""
Edge Cover Module

Точные ℓ-рёберные покрытия и оценки их стоимости.
"""

from .bounds import (
    BoundCase,
    CoverBound,
    cheriyan_thurimella_bound,
    bipartite_cover_bound,
    corollary3_bound,
    scaling_case,
)
from .edge_cover import (
    CoverSpec,
    check_feasible,
    cover_cost,
    is_edge_cover,
    min_cost_edge_cover,
    min_size_edge_cover,
)

__all__ = [
    # Solvers
    "CoverSpec",
    "is_edge_cover",
    "check_feasible",
    "min_size_edge_cover",
    "min_cost_edge_cover",
    "cover_cost",
    # Bounds
    "BoundCase",
    "CoverBound",
    "scaling_case",
    "corollary3_bound",
    "bipartite_cover_bound",
    "cheriyan_thurimella_bound",
]
