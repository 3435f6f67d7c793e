"""
Oracle Module

Эталонные решатели полным перебором.
"""

from .brute import (
    brute_edge_connectivity,
    brute_max_conn_m_edges,
    brute_min_cost_edge_cover,
    brute_node_connectivity,
    brute_opt_kcs,
)

__all__ = [
    "brute_min_cost_edge_cover",
    "brute_opt_kcs",
    "brute_max_conn_m_edges",
    "brute_edge_connectivity",
    "brute_node_connectivity",
]
