"""
Polytope Membership

Точная проверка принадлежности вектора x многогранникам:
- P^f_con(G, k): x(δ(S)) >= k для всех ∅ ≠ S ⊂ V;
- P^f_cov(G, ℓ): 0 <= x <= 1, x(δ(v)) >= ℓ (семейство 1);
- P_cov(G, ℓ): семейство 1 плюс для S ⊆ V, F ⊆ δ(S), ℓ|S| − |F| >= 1 нечётно
  x(ζ(S)∖F) >= (ℓ|S| − |F| + 1)/2 (семейство 2).

Вся арифметика — Fraction; равенство lhs = rhs фиксируется как тугое ограничение.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence

from ..config import SolverConfig, resolve
from ..connectivity.connectivity import ConnReport, fractional_edge_connectivity
from ..errors import InstanceTooLargeError, ParameterError
from ..graph.core import CutMode, EdgeSet, MultiGraph, delta, mask_to_nodes, zeta
from ..graph.vectors import frac_vector, total

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Constraint:
    """
    Одно проверенное неравенство lhs >= rhs

    family: 1 (степенное, side — один узел) или 2 (нечётное множество S, F ⊆ δ(S))
    """
    family: int
    side: int
    removed: EdgeSet
    lhs: Fraction
    rhs: Fraction
    cut: CutMode = CutMode.ALL

    @property
    def slack(self) -> Fraction:
        return self.lhs - self.rhs

    @property
    def is_tight(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "S": mask_to_nodes(self.side),
            "F": sorted(self.removed),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "cut": self.cut.value,
        }


@dataclass
class MembershipVerdict:
    """Итог проверки: первое нарушение (по порядку масок) и тугие ограничения"""
    ok: bool = True
    violation: Optional[Constraint] = None
    tight_constraints: List[Constraint] = field(default_factory=list)
    checked: int = 0

    def record(self, constraint: Constraint) -> bool:
        """Учесть ограничение; False — нарушено (дальше проверять не нужно)"""
        self.checked += 1
        if constraint.lhs < constraint.rhs:
            self.ok = False
            self.violation = constraint
            return False
        if constraint.is_tight:
            self.tight_constraints.append(constraint)
        return True

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violation": None if self.violation is None else self.violation.to_dict(),
            "tight_constraints": [c.to_dict() for c in self.tight_constraints],
            "checked": self.checked,
        }


@dataclass(frozen=True)
class ConMembership:
    """x ∈ P^f_con(G, k)? report — минимальный разрез x(δ(S))"""
    ok: bool
    k: int
    report: ConnReport

    @property
    def value(self) -> Fraction:
        return self.report.value

    @property
    def witness(self) -> Optional[int]:
        """Маска S с x(δ(S)) < k, если x вне многогранника"""
        return None if self.ok else self.report.side

    def to_dict(self) -> dict:
        return {"ok": self.ok, "k": self.k, "cut": self.report.to_dict()}


def check_enum_cap(g: MultiGraph, config: SolverConfig):
    if g.n > config.enum_max_nodes:
        raise InstanceTooLargeError(
            f"Constraint enumeration cap is n <= {config.enum_max_nodes}, instance has n={g.n}",
            limit=config.enum_max_nodes,
            actual=g.n,
        )


def in_frac_con(
    g: MultiGraph,
    x: Sequence,
    k: int,
    config: Optional[SolverConfig] = None
) -> ConMembership:
    """
    x ∈ P^f_con(G, k) iff дробная рёберная связность >= k

    Raises:
        GraphError: x вне [0, 1]
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    report = fractional_edge_connectivity(g, x, config)
    return ConMembership(ok=report.value >= k, k=k, report=report)


def _degree_constraints(g: MultiGraph, x: Sequence[Fraction], ell: int, verdict: MembershipVerdict):
    modes = (CutMode.LEAVING, CutMode.ENTERING) if g.directed else (CutMode.ALL,)
    for v in range(g.n):
        for mode in modes:
            cut = delta(g, 1 << v, mode)
            constraint = Constraint(
                family=1, side=1 << v, removed=frozenset(),
                lhs=total(x, cut), rhs=Fraction(ell), cut=mode,
            )
            if not verdict.record(constraint):
                return


def in_frac_cover(g: MultiGraph, x: Sequence, ell: int) -> MembershipVerdict:
    """
    x ∈ P^f_cov(G, ℓ): рамки и x(δ(v)) >= ℓ
    (для орграфа — исходящие и входящие дуги каждого узла)
    """
    if ell < 1:
        raise ParameterError(f"l must be >= 1, got {ell}")
    x = frac_vector(g, x)
    verdict = MembershipVerdict()
    _degree_constraints(g, x, ell, verdict)
    return verdict


def _odd_set_constraints(
    g: MultiGraph,
    x: Sequence[Fraction],
    ell: int,
    config: SolverConfig,
    verdict: MembershipVerdict,
    exhaustive: bool,
    proper_only: bool
):
    full = g.all_nodes_mask
    for mask in range(1, full + 1):
        if proper_only and mask == full:
            continue
        demand = ell * bin(mask).count("1")
        zeta_value = total(x, zeta(g, mask))
        cut = sorted(delta(g, mask), key=lambda e: (-x[e], e))

        if exhaustive:
            if len(cut) > config.enum_max_cut_edges:
                raise InstanceTooLargeError(
                    f"|δ(S)| = {len(cut)} exceeds enum_max_cut_edges={config.enum_max_cut_edges}",
                    limit=config.enum_max_cut_edges,
                    actual=len(cut),
                )
            ordered = sorted(cut)
            for size in range(0, min(len(cut), demand - 1) + 1):
                if (demand - size) % 2 == 0:
                    continue
                for removed in combinations(ordered, size):
                    constraint = Constraint(
                        family=2, side=mask, removed=frozenset(removed),
                        lhs=zeta_value - total(x, removed),
                        rhs=Fraction(demand - size + 1, 2),
                    )
                    if not verdict.record(constraint):
                        return
            continue

        # При фиксированном |F| правая часть постоянна, а левая минимальна,
        # когда F состоит из |F| рёбер разреза с наибольшими x
        prefix = Fraction(0)
        for size in range(0, min(len(cut), demand - 1) + 1):
            if size:
                prefix += x[cut[size - 1]]
            if (demand - size) % 2 == 0:
                continue
            constraint = Constraint(
                family=2, side=mask, removed=frozenset(cut[:size]),
                lhs=zeta_value - prefix,
                rhs=Fraction(demand - size + 1, 2),
            )
            if not verdict.record(constraint):
                return


def cover_polytope_verdict(
    g: MultiGraph,
    x: Sequence,
    ell: int,
    config: Optional[SolverConfig] = None,
    exhaustive: bool = False,
    proper_only: bool = False
) -> MembershipVerdict:
    """
    Проверка описания P_cov(G, ℓ)

    Args:
        exhaustive: Перебирать все F ⊆ δ(S) (ограничено enum_max_cut_edges)
            вместо точного минимума по префиксам отсортированного разреза
        proper_only: Проверять только семейство 2 при S ≠ V
    """
    if ell < 1:
        raise ParameterError(f"l must be >= 1, got {ell}")
    config = resolve(config)
    x = frac_vector(g, x)

    verdict = MembershipVerdict()
    if g.directed:
        # Покрытия орграфа совпадают с покрытиями двудольного дубля, а там P_cov = P^f_cov
        _degree_constraints(g, x, ell, verdict)
        return verdict

    check_enum_cap(g, config)
    if not proper_only:
        _degree_constraints(g, x, ell, verdict)
        if not verdict.ok:
            return verdict
    _odd_set_constraints(g, x, ell, config, verdict, exhaustive, proper_only)

    logger.debug(
        "cover polytope l=%d: checked=%d tight=%d ok=%s",
        ell, verdict.checked, len(verdict.tight_constraints), verdict.ok,
    )
    return verdict


def in_integral_cover_polytope(
    g: MultiGraph,
    x: Sequence,
    ell: int,
    config: Optional[SolverConfig] = None,
    exhaustive: bool = False
) -> MembershipVerdict:
    """
    x ∈ P_cov(G, ℓ) — выпуклая оболочка ℓ-рёберных покрытий

    Семейства 1 и 2 проверяются для всех S ⊆ V (S = ∅ исключается
    условием ℓ|S| − |F| >= 1). Для каждого S и каждого допустимого |F|
    проверяется минимум левой части, поэтому вердикт точный и без
    полного перебора F.

    Raises:
        InstanceTooLargeError: n > enum_max_nodes (или |δ(S)| > enum_max_cut_edges
            при exhaustive)
    """
    return cover_polytope_verdict(g, x, ell, config, exhaustive=exhaustive)
