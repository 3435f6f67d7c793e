"""
Cover Bounds

Оценки стоимости малого ℓ-покрытия в k-рёберно-связных
и двудольных графах, и оценка размера (k−1)-покрытия |E| − ⌊n/2⌋.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from ..connectivity.connectivity import edge_connectivity
from ..errors import GraphError, NotConnectedError, ParameterError
from ..graph.core import MultiGraph, is_bipartite
from ..graph.vectors import cost_vector, total


class BoundCase(Enum):
    """Какая ветвь теоремы дала оценку"""
    EVEN_OR_LARGE = "even-or-large"
    ODD_SMALL = "odd-small"
    BIPARTITE = "bipartite"


@dataclass(frozen=True)
class CoverBound:
    """Оценка c(I) с меткой случая и ослабленной формой (ℓ/k + 1/(kn))·c(E)"""
    value: Fraction
    case: BoundCase
    relaxed_value: Fraction
    k: int
    ell: int

    def to_dict(self) -> dict:
        return {
            "value": str(self.value),
            "case": self.case.value,
            "relaxed_value": str(self.relaxed_value),
            "k": self.k,
            "l": self.ell,
        }


def check_ell_k(k: int, ell: int):
    if not 1 <= ell <= k - 1:
        raise ParameterError(f"Need 1 <= l <= k-1, got l={ell}, k={k}")


def scaling_case(n: int, k: int, ell: int, x_total: Fraction) -> BoundCase:
    """
    even-or-large: ℓn чётно или x(E) >= kn/2 + k/(2ℓ); иначе odd-small

    Для оценки покрытия x ≡ 1 и x(E) = |E|.
    """
    if (ell * n) % 2 == 0 or x_total >= Fraction(k * n, 2) + Fraction(k, 2 * ell):
        return BoundCase.EVEN_OR_LARGE
    return BoundCase.ODD_SMALL


def corollary3_bound(
    g: MultiGraph,
    c: Sequence,
    k: int,
    ell: int,
    edge_conn: Optional[int] = None
) -> "CoverBound":
    """
    Оценка стоимости ℓ-покрытия k-рёберно-связного графа

    c(I) <= (ℓ/k)·c(E) в случае even-or-large,
    иначе c(I) <= (ℓn+1)/(2|E|)·c(E) <= (ℓ/k + 1/(kn))·c(E).

    Args:
        edge_conn: Уже вычисленная рёберная связность (иначе считается здесь)

    Raises:
        NotConnectedError: g не k-рёберно-связен — гипотеза не выполнена
    """
    check_ell_k(k, ell)
    if g.directed:
        raise GraphError("corollary3_bound is stated for undirected graphs")
    costs = cost_vector(g, c)

    if edge_conn is None:
        report = edge_connectivity(g)
        edge_conn = report.value
    else:
        report = None
    if edge_conn < k:
        raise NotConnectedError(
            f"Graph is {edge_conn}-edge-connected, bound needs k={k}", report=report
        )

    n, m = g.n, g.m
    c_total = total(costs)
    case = scaling_case(n, k, ell, Fraction(m))
    if case is BoundCase.EVEN_OR_LARGE:
        value = Fraction(ell, k) * c_total
    else:
        value = Fraction(ell * n + 1, 2 * m) * c_total
    relaxed = (Fraction(ell, k) + Fraction(1, k * n)) * c_total

    return CoverBound(value=value, case=case, relaxed_value=relaxed, k=k, ell=ell)


def bipartite_cover_bound(g: MultiGraph, c: Sequence, k: int, ell: int) -> CoverBound:
    """Двудольный граф с минимальной степенью >= k: c(I) <= (ℓ/k)·c(E)"""
    check_ell_k(k, ell)
    if g.directed or not is_bipartite(g):
        raise GraphError("bipartite_cover_bound needs an undirected bipartite graph")
    if k < 2 or min(g.degrees(), default=0) < k:
        raise ParameterError(f"Bipartite bound needs minimum degree >= k >= 2, k={k}")

    c_total = total(cost_vector(g, c))
    value = Fraction(ell, k) * c_total
    return CoverBound(
        value=value,
        case=BoundCase.BIPARTITE,
        relaxed_value=value,
        k=k,
        ell=ell,
    )


def cheriyan_thurimella_bound(g: MultiGraph) -> int:
    """|E| − ⌊n/2⌋: размер (k−1)-покрытия k-рёберно-связного графа"""
    return g.m - g.n // 2
