"""
Matching Engine Module

Точные поток, паросочетание, b-паросочетание и двудольное b-покрытие.
"""

from .b_matching import (
    BMatchingGadget,
    DegreeBound,
    bipartite_max_b_matching,
    build_gadget,
    max_b_matching,
)
from .blossom import (
    MatchingCertificate,
    max_matching,
    tutte_berge_bound,
    tutte_berge_witness,
)
from .flow import FlowNetwork, FlowResult, cut_capacity, max_flow
from .min_cost_flow import MinCostFlowNetwork, min_cost_bipartite_b_edge_cover

__all__ = [
    # Flow
    "FlowNetwork",
    "FlowResult",
    "max_flow",
    "cut_capacity",
    # Matching
    "max_matching",
    "tutte_berge_bound",
    "tutte_berge_witness",
    "MatchingCertificate",
    # b-matching
    "DegreeBound",
    "BMatchingGadget",
    "build_gadget",
    "max_b_matching",
    "bipartite_max_b_matching",
    # Min-cost
    "MinCostFlowNetwork",
    "min_cost_bipartite_b_edge_cover",
]
