"""
Polytope Verification Module

Точная (рациональная) проверка принадлежности многогранникам покрытий
и связности, проверка теоремы о масштабировании.
"""

from .membership import (
    ConMembership,
    Constraint,
    MembershipVerdict,
    cover_polytope_verdict,
    in_frac_con,
    in_frac_cover,
    in_integral_cover_polytope,
)
from .scaling import (
    BipartiteScalingReport,
    IdentityReport,
    ScaleFactor,
    Theorem1Report,
    check_scaling_identities,
    relaxed_factor,
    theorem1_mu,
    verify_bipartite_scaling,
    verify_theorem1,
)

__all__ = [
    # Membership
    "Constraint",
    "MembershipVerdict",
    "ConMembership",
    "in_frac_con",
    "in_frac_cover",
    "in_integral_cover_polytope",
    "cover_polytope_verdict",
    # Scaling
    "ScaleFactor",
    "theorem1_mu",
    "relaxed_factor",
    "Theorem1Report",
    "verify_theorem1",
    "BipartiteScalingReport",
    "verify_bipartite_scaling",
    "IdentityReport",
    "check_scaling_identities",
]
