"""
Edge Vectors

Векторы стоимостей и дробные точки LP, индексированные EdgeId.
Все значения — точные рациональные числа (Fraction).
"""

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional, Sequence, Tuple, Union

from ..errors import GraphError
from .core import MultiGraph

Number = Union[int, Fraction]

# c(e) >= 0 для каждого ребра
CostVector = Tuple[Fraction, ...]

# 0 <= x_e <= 1 для каждого ребра
FracVector = Tuple[Fraction, ...]


def _as_fraction(value, idx: int) -> Fraction:
    if isinstance(value, str):
        return Fraction(value)
    if not isinstance(value, Rational):
        raise GraphError(f"Entry {idx} must be an exact rational, got {value!r}")
    return Fraction(value)


def cost_vector(g: MultiGraph, values: Sequence) -> CostVector:
    """Проверить и нормализовать вектор стоимостей"""
    if len(values) != g.m:
        raise GraphError(f"Cost vector has {len(values)} entries, graph has {g.m} edges")
    result = tuple(_as_fraction(v, i) for i, v in enumerate(values))
    for idx, c in enumerate(result):
        if c < 0:
            raise GraphError(f"Cost of edge {idx} is negative: {c}")
    return result


def frac_vector(g: MultiGraph, values: Sequence) -> FracVector:
    """Проверить и нормализовать дробный вектор (ограничения коробки 0 <= x_e <= 1)"""
    if len(values) != g.m:
        raise GraphError(f"Vector has {len(values)} entries, graph has {g.m} edges")
    result = tuple(_as_fraction(v, i) for i, v in enumerate(values))
    for idx, x in enumerate(result):
        if not 0 <= x <= 1:
            raise GraphError(f"x[{idx}] = {x} violates box bounds 0 <= x_e <= 1")
    return result


def unit_costs(g: MultiGraph) -> CostVector:
    return tuple(Fraction(1) for _ in range(g.m))


def ones(g: MultiGraph) -> FracVector:
    return tuple(Fraction(1) for _ in range(g.m))


def scale(x: Sequence[Fraction], factor: Number) -> FracVector:
    return tuple(Fraction(factor) * v for v in x)


def total(values: Sequence[Fraction], edge_ids: Optional[Iterable[int]] = None) -> Fraction:
    """x(F) = сумма x(e) по e ∈ F (по всем рёбрам, если F не задано)"""
    if edge_ids is None:
        return sum(values, Fraction(0))
    return sum((values[i] for i in edge_ids), Fraction(0))


def is_uniform(values: Sequence[Fraction]) -> bool:
    return len(set(values)) <= 1
