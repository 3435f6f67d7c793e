"""
Graph File Format

Текстовый формат в духе DIMACS:

    c комментарий
    p graph <n> <m> <directed: 0|1>
    e <u> <v> [cost]

EdgeId = порядок строк `e`. Стоимость — "num" или "num/den";
либо она есть во всех строках `e`, либо ни в одной.
"""

import hashlib
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from ..errors import FormatError
from ..graph.core import MultiGraph
from ..graph.vectors import CostVector


def format_rational(value: Fraction) -> str:
    """Рациональное число как "p/q" (целое — без знаменателя), никогда не десятичная дробь"""
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {token!r}", line=line) from None


def _parse_cost(token: str, line: int) -> Fraction:
    try:
        num, _, den = token.partition("/")
        value = Fraction(int(num), int(den)) if den else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"cost must be 'num' or 'num/den', got {token!r}", line=line) from None
    if value < 0:
        raise FormatError(f"cost must be nonnegative, got {token}", line=line)
    return value


def parse_graph(text: str) -> Tuple[MultiGraph, Optional[CostVector]]:
    """
    Разобрать текст графа

    Returns:
        (граф, стоимости или None)

    Raises:
        FormatError: с номером строки (нумерация с 1)
    """
    header = None
    edges: List[Tuple[int, int]] = []
    costs: List[Fraction] = []
    with_costs: Optional[bool] = None

    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue

        if tokens[0] == "p":
            if header is not None:
                raise FormatError("duplicate 'p' header", line=number)
            if len(tokens) != 5 or tokens[1] != "graph":
                raise FormatError("header must be 'p graph <n> <m> <0|1>'", line=number)
            n = _parse_int(tokens[2], "n", number)
            m = _parse_int(tokens[3], "m", number)
            if tokens[4] not in ("0", "1"):
                raise FormatError(f"directed flag must be 0 or 1, got {tokens[4]!r}", line=number)
            if n < 0 or m < 0:
                raise FormatError("n and m must be nonnegative", line=number)
            header = (n, m, tokens[4] == "1")
            continue

        if tokens[0] == "e":
            if header is None:
                raise FormatError("edge line before the 'p' header", line=number)
            if len(tokens) not in (3, 4):
                raise FormatError("edge line must be 'e <u> <v> [cost]'", line=number)
            u = _parse_int(tokens[1], "endpoint", number)
            v = _parse_int(tokens[2], "endpoint", number)
            n = header[0]
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"endpoint outside [0, {n}) in edge ({u}, {v})", line=number)
            if u == v:
                raise FormatError(f"self-loop at node {u}", line=number)

            has_cost = len(tokens) == 4
            if with_costs is None:
                with_costs = has_cost
            elif with_costs != has_cost:
                raise FormatError("costs must be given on every edge line or on none", line=number)
            if has_cost:
                costs.append(_parse_cost(tokens[3], number))
            edges.append((u, v))
            continue

        raise FormatError(f"unknown line type {tokens[0]!r}", line=number)

    if header is None:
        raise FormatError("missing 'p graph' header")
    n, m, directed = header
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")

    g = MultiGraph.from_edges(n, edges, directed=directed)
    return g, (tuple(costs) if with_costs else None)


def serialize_graph(g: MultiGraph, c: Optional[Sequence] = None) -> str:
    """
    Нормальная форма: без комментариев, одиночные пробелы,
    концы неориентированного ребра по возрастанию, стоимости в несократимом виде
    """
    lines = [f"p graph {g.n} {g.m} {1 if g.directed else 0}"]
    for idx, (u, v) in enumerate(g.edges):
        if c is None:
            lines.append(f"e {u} {v}")
        else:
            lines.append(f"e {u} {v} {format_rational(c[idx])}")
    return "\n".join(lines) + "\n"


def normalize(text: str) -> str:
    return serialize_graph(*parse_graph(text))


def read_graph(path: Union[str, Path]) -> Tuple[MultiGraph, Optional[CostVector]]:
    return parse_graph(Path(path).read_text())


def write_graph(path: Union[str, Path], g: MultiGraph, c: Optional[Sequence] = None):
    Path(path).write_text(serialize_graph(g, c))


def instance_digest(g: MultiGraph, c: Optional[Sequence] = None) -> str:
    """sha256 нормальной формы экземпляра"""
    return hashlib.sha256(serialize_graph(g, c).encode()).hexdigest()


def parse_vector(text: str, m: int) -> Tuple[Fraction, ...]:
    """
    Вектор x по рёбрам: m рациональных чисел через пробелы и переводы строк,
    строки `c` — комментарии

    Raises:
        FormatError: неверное число или количество значений
    """
    values: List[Fraction] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        values.extend(_parse_cost(token, number) for token in tokens)
    if len(values) != m:
        raise FormatError(f"vector has {len(values)} entries, graph has {m} edges")
    return tuple(values)
