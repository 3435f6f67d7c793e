"""
Formats Module

Текстовый формат графа и дайджест экземпляра.
"""

from .graph_file import (
    format_rational,
    instance_digest,
    normalize,
    parse_graph,
    parse_vector,
    read_graph,
    serialize_graph,
    write_graph,
)

__all__ = [
    "parse_graph",
    "parse_vector",
    "serialize_graph",
    "normalize",
    "read_graph",
    "write_graph",
    "instance_digest",
    "format_rational",
]
