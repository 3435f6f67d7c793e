"""
Errors

Иерархия исключений kcover-toolkit.
Ошибки входных данных наследуются от ValueError.
"""

from typing import Any, Optional


class KCoverError(Exception):
    """Базовое исключение пакета"""


class GraphError(KCoverError, ValueError):
    """Некорректный граф: узел вне диапазона, петля, неверная ориентация"""


class InfeasibleError(KCoverError, ValueError):
    """Требование по степеням невыполнимо (deg(v) < ℓ или deg(v) < b(v))"""

    def __init__(self, message: str, node: Optional[int] = None):
        super().__init__(message)
        self.node = node


class InstanceTooLargeError(KCoverError, ValueError):
    """Превышен настроенный лимит перебора. Никогда не усекаем молча."""

    def __init__(self, message: str, limit: Optional[int] = None, actual: Optional[int] = None):
        super().__init__(message)
        self.limit = limit
        self.actual = actual


class NotConnectedError(KCoverError, ValueError):
    """Граф не k-связен (или не k-рёберно-связен) — гипотеза операции нарушена"""

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report  # ConnReport с разрезом-свидетелем


class HypothesisError(KCoverError, ValueError):
    """Вектор x не лежит в P^f_con(G, k)"""

    def __init__(self, message: str, witness: Any = None, value: Any = None):
        super().__init__(message)
        self.witness = witness  # маска множества S с x(δ(S)) < k
        self.value = value


class FormatError(KCoverError, ValueError):
    """Ошибка разбора файла графа"""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ParameterError(KCoverError, ValueError):
    """Параметр вне допустимого диапазона (ℓ, k, β, бюджет)"""
