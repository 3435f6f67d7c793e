"""
Instance Generators

Детерминированные генераторы тестовых семейств:
графы Харари, случайные k-рёберно-связные мультиграфы,
полные графы с β-метрическими стоимостями и фиксированные графы.

Случайность — только numpy.random.Generator(PCG64(seed)):
одинаковые аргументы дают одинаковый результат.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..config import SolverConfig, resolve
from ..connectivity.connectivity import edge_connectivity, node_connectivity
from ..errors import ParameterError
from ..graph.core import MultiGraph
from ..graph.vectors import CostVector, FracVector, frac_vector
from ..polytope.membership import in_frac_con

logger = logging.getLogger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 с заданным seed (имя и версия генератора зафиксированы в docs/)"""
    return np.random.Generator(np.random.PCG64(seed))


def from_networkx(graph: nx.Graph, directed: bool = False) -> MultiGraph:
    """MultiGraph из графа networkx с узлами 0..n-1; рёбра в отсортированном порядке"""
    pairs = [(int(u), int(v)) for u, v in graph.edges()]
    if not directed:
        pairs = [(min(u, v), max(u, v)) for u, v in pairs]
    return MultiGraph.from_edges(graph.number_of_nodes(), sorted(pairs), directed=directed)


# =============================================================================
# Фиксированные семейства
# =============================================================================

def complete_graph(n: int) -> MultiGraph:
    return MultiGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_digraph(n: int) -> MultiGraph:
    """Все дуги u→v, u ≠ v; порядок: по u, затем по v"""
    return MultiGraph.from_edges(
        n, [(u, v) for u in range(n) for v in range(n) if u != v], directed=True
    )


def cycle_graph(n: int) -> MultiGraph:
    if n < 3:
        raise ParameterError(f"A simple cycle needs n >= 3, got {n}")
    return MultiGraph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def petersen_graph() -> MultiGraph:
    return from_networkx(nx.petersen_graph())


# =============================================================================
# Графы Харари
# =============================================================================

def _harary_pairs(k: int, n: int) -> List[Tuple[int, int]]:
    graph = nx.hkn_harary_graph(k, n)
    return sorted((min(u, v), max(u, v)) for u, v in graph.edges())


def harary(k: int, n: int) -> MultiGraph:
    """
    H(k, n): ⌈kn/2⌉ рёбер, узловая связность ровно k

    Raises:
        ParameterError: не 2 <= k < n
    """
    if not 2 <= k < n:
        raise ParameterError(f"Harary graph needs 2 <= k < n, got k={k}, n={n}")
    g = MultiGraph.from_edges(n, _harary_pairs(k, n))

    connectivity = node_connectivity(g).value
    if connectivity != k or g.m != (k * n + 1) // 2:
        raise RuntimeError(
            f"Harary construction produced kappa={connectivity}, m={g.m} for k={k}, n={n}"
        )
    return g


def _dense_base(k: int, n: int) -> List[Tuple[int, int]]:
    """
    База при n <= k: k-рёберно-связный кратный мультиграф

    n = 2: k параллельных рёбер, степень k. n >= 3: цикл, каждое ребро
    повторено ⌈k/2⌉ раз; степень 2⌈k/2⌉, то есть k при чётном k и k + 1
    при нечётном. Любой разрез пересекает два пучка, λ = 2⌈k/2⌉ >= k.
    """
    if n == 2:
        return [(0, 1)] * k
    multiplicity = (k + 1) // 2
    return [(v, (v + 1) % n) for v in range(n) for _ in range(multiplicity)]


def random_k_edge_connected(
    n: int,
    k: int,
    extra: int,
    seed: int,
    directed: bool = False,
    simple: bool = False
) -> MultiGraph:
    """
    k-рёберно-связный мультиграф: база + extra случайных рёбер

    База — H(k, n) (для k = 1 — путь), при n <= k — кратный цикл
    степени 2⌈k/2⌉ (см. _dense_base).
    Для орграфа база двунаправлена. simple=True запрещает параллельные
    рёбра среди добавленных.

    Raises:
        ParameterError: k < 1, n < 2, extra < 0 или не хватает пар для simple
    """
    if k < 1 or n < 2 or extra < 0:
        raise ParameterError(f"Need k >= 1, n >= 2, extra >= 0; got k={k}, n={n}, extra={extra}")
    rng = make_rng(seed)

    base = _harary_pairs(k, n) if k < n else _dense_base(k, n)
    pairs = [p for u, v in base for p in ((u, v), (v, u))] if directed else list(base)

    if simple:
        used = set(pairs) if directed else {(min(u, v), max(u, v)) for u, v in pairs}
        if directed:
            candidates = [(u, v) for u in range(n) for v in range(n) if u != v and (u, v) not in used]
        else:
            candidates = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in used]
        if extra > len(candidates):
            raise ParameterError(f"Only {len(candidates)} free pairs for {extra} simple extra edges")
        for _ in range(extra):
            pairs.append(candidates.pop(int(rng.integers(len(candidates)))))
    else:
        for _ in range(extra):
            u = int(rng.integers(n))
            v = int(rng.integers(n - 1))
            if v >= u:
                v += 1
            pairs.append((u, v))

    g = MultiGraph.from_edges(n, pairs, directed=directed)
    lam = edge_connectivity(g).value
    if lam < k:
        raise RuntimeError(f"Generated graph has edge connectivity {lam} < {k}")
    logger.debug("random_k_edge_connected n=%d k=%d extra=%d seed=%d: m=%d", n, k, extra, seed, g.m)
    return g


# =============================================================================
# Стоимости
# =============================================================================

def random_costs(
    g: MultiGraph,
    seed: int,
    low=1,
    high=10,
    config: Optional[SolverConfig] = None
) -> CostVector:
    """Стоимости j/D, равномерно на сетке в [low, high], D = cost_denominator"""
    config = resolve(config)
    denominator = config.cost_denominator
    low, high = Fraction(low), Fraction(high)
    if low < 0 or high < low:
        raise ParameterError(f"Need 0 <= low <= high, got [{low}, {high}]")
    rng = make_rng(seed)
    first = ceil(low * denominator)
    last = floor(high * denominator)
    return tuple(Fraction(int(rng.integers(first, last + 1)), denominator) for _ in range(g.m))


@dataclass(frozen=True)
class BetaMetricInstance:
    """Полный граф со стоимостями, удовлетворяющими β-неравенству треугольника"""
    graph: MultiGraph
    costs: CostVector
    beta: Fraction

    def cost_of(self, u: int, v: int) -> Fraction:
        u, v = min(u, v), max(u, v)
        n = self.graph.n
        # Рёбра полного графа идут в лексикографическом порядке пар
        return self.costs[u * n - u * (u + 1) // 2 + (v - u - 1)]

    def triangle_violation(self) -> Optional[Tuple[int, int, int]]:
        """Первая тройка (u, a, v) с c(uv) > β(c(ua) + c(av)) или None"""
        n = self.graph.n
        for u in range(n):
            for v in range(n):
                if v == u:
                    continue
                for a in range(n):
                    if a in (u, v):
                        continue
                    if self.cost_of(u, v) > self.beta * (self.cost_of(u, a) + self.cost_of(a, v)):
                        return (u, a, v)
        return None


def beta_metric_instance(
    n: int,
    beta,
    seed: int,
    config: Optional[SolverConfig] = None
) -> BetaMetricInstance:
    """
    K_n со стоимостями на сетке 1/D из [1, 2β]

    Любые a, b, c из [1, 2β] дают c <= 2β <= β(a + b). При β = 1/2 все стоимости 1.

    Raises:
        ParameterError: β вне [1/2, 1) или n < 3
    """
    beta = Fraction(beta)
    if not Fraction(1, 2) <= beta < 1:
        raise ParameterError(f"beta must lie in [1/2, 1), got {beta}")
    if n < 3:
        raise ParameterError(f"beta-metric instance needs n >= 3, got {n}")

    g = complete_graph(n)
    costs = random_costs(g, seed, 1, 2 * beta, config)
    instance = BetaMetricInstance(graph=g, costs=costs, beta=beta)
    violation = instance.triangle_violation()
    if violation is not None:
        raise RuntimeError(f"beta-triangle inequality fails at {violation}")
    return instance


# =============================================================================
# Допустимые дробные векторы
# =============================================================================

def perturb_feasible(
    g: MultiGraph,
    x: Sequence,
    k: int,
    seed: int,
    rounds: Optional[int] = None,
    config: Optional[SolverConfig] = None
) -> FracVector:
    """
    Уменьшать случайные координаты x, пока x остаётся в P^f_con(G, k)

    Каждый шаг вычитает j/D (1 <= j <= D/4) из случайного ребра и
    откатывается, если какой-то разрез стал меньше k.

    Raises:
        ParameterError: исходный x вне P^f_con(G, k)
    """
    config = resolve(config)
    current = list(frac_vector(g, x))
    if not in_frac_con(g, current, k, config).ok:
        raise ParameterError(f"Starting vector is not in the fractional {k}-connectivity polytope")
    if g.m == 0:
        return tuple(current)

    rng = make_rng(seed)
    denominator = config.cost_denominator
    rounds = 2 * g.m if rounds is None else rounds
    accepted = 0
    for _ in range(rounds):
        e = int(rng.integers(g.m))
        step = Fraction(int(rng.integers(1, denominator // 4 + 1)), denominator)
        step = min(step, current[e])
        if step == 0:
            continue
        current[e] -= step
        if in_frac_con(g, current, k, config).ok:
            accepted += 1
        else:
            current[e] += step

    logger.debug("perturb_feasible: %d of %d steps accepted", accepted, rounds)
    return tuple(current)
