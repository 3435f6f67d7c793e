"""
Scaling Verification

Точная проверка теоремы о масштабировании: для x ∈ P^f_con(G, k)
и 1 <= ℓ <= k−1 вектор μ·x лежит в P_cov(G, ℓ), где
μ = ℓ/k, если ℓn чётно или x(E) >= kn/2 + k/(2ℓ), и μ = (ℓn+1)/(2x(E)) иначе.
Дополнительно: ослабленный множитель ℓ/k + 1/(kn), двудольный случай
и промежуточные неравенства доказательства.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ..config import SolverConfig, resolve
from ..cover.bounds import BoundCase, check_ell_k, scaling_case
from ..errors import GraphError, HypothesisError, ParameterError
from ..graph.core import MultiGraph, bipartite_double, delta, is_bipartite, mask_to_nodes, zeta
from ..graph.vectors import frac_vector, scale, total
from .membership import (
    ConMembership,
    MembershipVerdict,
    check_enum_cap,
    cover_polytope_verdict,
    in_frac_con,
    in_frac_cover,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScaleFactor:
    """Множитель μ ∈ (0, 1] и ветвь, которая его дала"""
    mu: Fraction
    case: BoundCase

    def to_dict(self) -> dict:
        return {"mu": str(self.mu), "case": self.case.value}


def relaxed_factor(n: int, k: int, ell: int) -> Fraction:
    """ℓ/k + 1/(kn): множитель, годный в обоих случаях"""
    return Fraction(ell, k) + Fraction(1, k * n)


def theorem1_mu(n: int, k: int, ell: int, x_total) -> ScaleFactor:
    """
    μ = ℓ/k в случае even-or-large, иначе (ℓn+1)/(2·x(E))

    Raises:
        ParameterError: ℓ вне [1, k−1] или x(E) < kn/2
    """
    check_ell_k(k, ell)
    if n < 1:
        raise ParameterError(f"Need n >= 1, got {n}")
    x_total = Fraction(x_total)
    if x_total < Fraction(k * n, 2):
        raise ParameterError(f"x(E) = {x_total} is below kn/2 = {Fraction(k * n, 2)}")

    case = scaling_case(n, k, ell, x_total)
    if case is BoundCase.EVEN_OR_LARGE:
        return ScaleFactor(mu=Fraction(ell, k), case=case)
    return ScaleFactor(mu=Fraction(ell * n + 1) / (2 * x_total), case=case)


def _require_hypothesis(g: MultiGraph, x: Sequence[Fraction], k: int, config) -> ConMembership:
    membership = in_frac_con(g, x, k, config)
    if not membership.ok:
        raise HypothesisError(
            f"x is not in the fractional {k}-edge-connectivity polytope: "
            f"x(δ(S)) = {membership.value} for S = {mask_to_nodes(membership.witness)}",
            witness=membership.witness,
            value=membership.value,
        )
    return membership


@dataclass
class Theorem1Report:
    """
    Отчёт проверки: μ, вердикт для μ·x, вердикт для ослабленного множителя
    и проверка собственных подмножеств S ≠ V при множителе ℓ/k
    """
    k: int
    ell: int
    x_total: Fraction
    scale: ScaleFactor
    verdict: MembershipVerdict
    relaxed_factor: Fraction
    relaxed_verdict: MembershipVerdict
    proper_verdict: MembershipVerdict
    mu_within_relaxed: bool

    @property
    def ok(self) -> bool:
        return (
            self.verdict.ok
            and self.relaxed_verdict.ok
            and self.proper_verdict.ok
            and self.mu_within_relaxed
        )

    def summary(self) -> str:
        status = "✅" if self.ok else "❌"
        return (
            f"{status} k={self.k} l={self.ell}: mu={self.scale.mu} ({self.scale.case.value}), "
            f"relaxed={self.relaxed_factor}, tight={len(self.verdict.tight_constraints)}"
        )

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "l": self.ell,
            "x_total": str(self.x_total),
            "scale": self.scale.to_dict(),
            "verdict": self.verdict.to_dict(),
            "relaxed_factor": str(self.relaxed_factor),
            "relaxed_verdict": self.relaxed_verdict.to_dict(),
            "proper_verdict": self.proper_verdict.to_dict(),
            "mu_within_relaxed": self.mu_within_relaxed,
            "ok": self.ok,
        }


def verify_theorem1(
    g: MultiGraph,
    x: Sequence,
    k: int,
    ell: int,
    config: Optional[SolverConfig] = None,
    exhaustive: bool = False
) -> Theorem1Report:
    """
    Проверить μ·x ∈ P_cov(G, ℓ) и (ℓ/k + 1/(kn))·x ∈ P_cov(G, ℓ)

    Raises:
        HypothesisError: x ∉ P^f_con(G, k), со свидетелем-разрезом
        InstanceTooLargeError: превышен предел перебора
    """
    check_ell_k(k, ell)
    if g.directed:
        raise GraphError("verify_theorem1 is stated for undirected graphs")
    config = resolve(config)
    check_enum_cap(g, config)
    x = frac_vector(g, x)
    _require_hypothesis(g, x, k, config)

    x_total = total(x)
    factor = theorem1_mu(g.n, k, ell, x_total)
    relaxed = relaxed_factor(g.n, k, ell)

    verdict = cover_polytope_verdict(g, scale(x, factor.mu), ell, config, exhaustive)
    relaxed_verdict = cover_polytope_verdict(g, scale(x, relaxed), ell, config, exhaustive)
    proper_verdict = cover_polytope_verdict(
        g, scale(x, Fraction(ell, k)), ell, config, exhaustive, proper_only=True
    )

    report = Theorem1Report(
        k=k,
        ell=ell,
        x_total=x_total,
        scale=factor,
        verdict=verdict,
        relaxed_factor=relaxed,
        relaxed_verdict=relaxed_verdict,
        proper_verdict=proper_verdict,
        mu_within_relaxed=factor.mu <= relaxed,
    )
    logger.debug("theorem check n=%d: %s", g.n, report.summary())
    return report


@dataclass
class BipartiteScalingReport:
    """(ℓ/k)·x ∈ P_cov(G, ℓ) для двудольного G и x ∈ P^f_cov(G, k)"""
    k: int
    ell: int
    verdict: MembershipVerdict
    enumerated: Optional[MembershipVerdict] = None

    @property
    def ok(self) -> bool:
        return self.verdict.ok and (self.enumerated is None or self.enumerated.ok)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "l": self.ell,
            "verdict": self.verdict.to_dict(),
            "enumerated": None if self.enumerated is None else self.enumerated.to_dict(),
            "ok": self.ok,
        }


def verify_bipartite_scaling(
    g: MultiGraph,
    x: Sequence,
    k: int,
    ell: int,
    config: Optional[SolverConfig] = None
) -> BipartiteScalingReport:
    """
    Двудольный случай: P_cov = P^f_cov, поэтому достаточно степенных
    ограничений. Орграф проверяется через двудольный дубль. Для
    неориентированного графа в пределах enum_max_nodes полное описание
    P_cov проверяется ещё и перебором.

    Raises:
        GraphError: неориентированный граф не двудолен
        HypothesisError: x ∉ P^f_cov(G, k)
    """
    check_ell_k(k, ell)
    config = resolve(config)
    x = frac_vector(g, x)
    host = bipartite_double(g).graph if g.directed else g
    if not is_bipartite(host):
        raise GraphError("verify_bipartite_scaling needs a bipartite graph")

    hypothesis = in_frac_cover(g, x, k)
    if not hypothesis.ok:
        violation = hypothesis.violation
        raise HypothesisError(
            f"x is not in the fractional {k}-edge-cover polytope at node "
            f"{mask_to_nodes(violation.side)}",
            witness=violation.side,
            value=violation.lhs,
        )

    scaled = scale(x, Fraction(ell, k))
    verdict = in_frac_cover(g, scaled, ell)
    enumerated = None
    if not g.directed and g.n <= config.enum_max_nodes:
        enumerated = cover_polytope_verdict(g, scaled, ell, config)
    return BipartiteScalingReport(k=k, ell=ell, verdict=verdict, enumerated=enumerated)


@dataclass
class IdentityReport:
    """
    Промежуточные соотношения доказательства, проверенные точно

    zeta_identity: 2·x(ζ(S)) = Σ_{v∈S} x(δ(v)) + x(δ(S)) для всех S ≠ ∅
    zeta_bound:    x(ζ(S)) >= k|S|/2 + x(δ(S))/2
    pivotal_min:   min по S ⊊ V и F ⊆ δ(S) величины
                   x(δ(S)) − x(F) + ((k−ℓ)/ℓ)|F|, должна быть >= k/ℓ
    """
    k: int
    ell: int
    zeta_identity: bool
    zeta_bound: bool
    pivotal_min: Optional[Fraction]
    pivotal_side: int
    pivotal_target: Fraction
    proper_verdict: MembershipVerdict

    @property
    def pivotal(self) -> bool:
        return self.pivotal_min is None or self.pivotal_min >= self.pivotal_target

    @property
    def ok(self) -> bool:
        return self.zeta_identity and self.zeta_bound and self.pivotal and self.proper_verdict.ok

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "l": self.ell,
            "zeta_identity": self.zeta_identity,
            "zeta_bound": self.zeta_bound,
            "pivotal_min": None if self.pivotal_min is None else str(self.pivotal_min),
            "pivotal_side": mask_to_nodes(self.pivotal_side),
            "pivotal_target": str(self.pivotal_target),
            "pivotal": self.pivotal,
            "proper_verdict": self.proper_verdict.to_dict(),
            "ok": self.ok,
        }


def check_scaling_identities(
    g: MultiGraph,
    x: Sequence,
    k: int,
    ell: int,
    config: Optional[SolverConfig] = None
) -> IdentityReport:
    """
    Проверить ζ-тождество, ключевое неравенство и утверждение о S ≠ V

    Минимум по F ключевого неравенства точный: ребро входит в F
    ровно тогда, когда x_e > (k−ℓ)/ℓ.

    Raises:
        HypothesisError: x ∉ P^f_con(G, k)
    """
    check_ell_k(k, ell)
    if g.directed:
        raise GraphError("check_scaling_identities is stated for undirected graphs")
    config = resolve(config)
    check_enum_cap(g, config)
    x = frac_vector(g, x)
    _require_hypothesis(g, x, k, config)

    node_cut = [total(x, delta(g, 1 << v)) for v in range(g.n)]
    weight = Fraction(k - ell, ell)
    target = Fraction(k, ell)

    identity_ok = True
    bound_ok = True
    pivotal_min = None
    pivotal_side = 0
    full = g.all_nodes_mask
    for mask in range(1, full + 1):
        nodes = mask_to_nodes(mask)
        cut = delta(g, mask)
        cut_value = total(x, cut)
        zeta_value = total(x, zeta(g, mask))

        degree_sum = sum((node_cut[v] for v in nodes), Fraction(0))
        if 2 * zeta_value != degree_sum + cut_value:
            identity_ok = False
        if zeta_value < Fraction(k * len(nodes), 2) + cut_value / 2:
            bound_ok = False

        if mask == full:
            continue
        value = cut_value + sum((weight - x[e] for e in cut if x[e] > weight), Fraction(0))
        if pivotal_min is None or value < pivotal_min:
            pivotal_min = value
            pivotal_side = mask

    proper_verdict = cover_polytope_verdict(
        g, scale(x, Fraction(ell, k)), ell, config, proper_only=True
    )
    return IdentityReport(
        k=k,
        ell=ell,
        zeta_identity=identity_ok,
        zeta_bound=bound_ok,
        pivotal_min=pivotal_min,
        pivotal_side=pivotal_side,
        pivotal_target=target,
        proper_verdict=proper_verdict,
    )
