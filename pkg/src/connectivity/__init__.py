"""
Connectivity Module

Рёберная, узловая и дробная связность.
"""

from .connectivity import (
    ConnKind,
    ConnReport,
    edge_connectivity,
    fractional_edge_connectivity,
    is_k_connected,
    is_strongly_connected,
    local_node_connectivity,
    node_connectivity,
)

__all__ = [
    "ConnKind",
    "ConnReport",
    "edge_connectivity",
    "node_connectivity",
    "local_node_connectivity",
    "is_k_connected",
    "is_strongly_connected",
    "fractional_edge_connectivity",
]
