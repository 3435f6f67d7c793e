"""
Graph Core Module

Мультиграфы, разрезы δ/ζ и двудольный дубль.
"""

from .core import (
    BipartiteDouble,
    CutMode,
    EdgeSet,
    MultiGraph,
    NodeSet,
    as_mask,
    bipartite_double,
    delta,
    inside,
    is_bipartite,
    mask_to_nodes,
    subset_degrees,
    two_coloring,
    zeta,
)
from .vectors import (
    CostVector,
    FracVector,
    cost_vector,
    frac_vector,
    is_uniform,
    ones,
    scale,
    total,
    unit_costs,
)

__all__ = [
    # Types
    "MultiGraph",
    "EdgeSet",
    "NodeSet",
    "CutMode",
    "BipartiteDouble",
    # Incidence
    "delta",
    "zeta",
    "inside",
    "subset_degrees",
    "as_mask",
    "mask_to_nodes",
    # Structure
    "two_coloring",
    "is_bipartite",
    "bipartite_double",
    # Vectors
    "CostVector",
    "FracVector",
    "cost_vector",
    "frac_vector",
    "unit_costs",
    "ones",
    "scale",
    "total",
    "is_uniform",
]
