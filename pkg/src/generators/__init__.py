"""
Instance Generators Module

Детерминированные тестовые графы, стоимости и дробные векторы.
"""

from .instances import (
    BetaMetricInstance,
    beta_metric_instance,
    complete_digraph,
    complete_graph,
    cycle_graph,
    from_networkx,
    harary,
    make_rng,
    perturb_feasible,
    petersen_graph,
    random_costs,
    random_k_edge_connected,
)

__all__ = [
    # Fixed families
    "complete_graph",
    "complete_digraph",
    "cycle_graph",
    "petersen_graph",
    "from_networkx",
    # Random families
    "make_rng",
    "harary",
    "random_k_edge_connected",
    "random_costs",
    "perturb_feasible",
    # beta-metric
    "BetaMetricInstance",
    "beta_metric_instance",
]
