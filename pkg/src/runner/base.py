"""
Base Command

Базовый класс команды над одним экземпляром и отчёт о запуске.
"""

import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

from ..config import SolverConfig, resolve
from ..formats.graph_file import format_rational, instance_digest, parse_graph
from ..graph.core import MultiGraph


class RunStatus(Enum):
    """Итог запуска и код выхода CLI"""
    OK = 0
    VERDICT_FAILED = 1
    ERROR = 2


def to_jsonable(value: Any) -> Any:
    """Множества — отсортированные списки, рациональные — строки "p/q" """
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


@dataclass
class RunReport:
    """Результат одной команды над одним экземпляром"""
    command: str
    source: str
    digest: str = ""

    # Результаты и проверки
    outputs: Dict[str, Any] = field(default_factory=dict)
    verdicts: Dict[str, bool] = field(default_factory=dict)

    # Метаданные
    execution_time_seconds: float = 0
    error: Optional[str] = None
    error_type: Optional[str] = None

    # Время
    timestamp: datetime = field(default_factory=datetime.now)

    @property
    def passed(self) -> bool:
        return self.error is None and all(self.verdicts.values())

    @property
    def status(self) -> RunStatus:
        if self.error is not None:
            return RunStatus.ERROR
        if not all(self.verdicts.values()):
            return RunStatus.VERDICT_FAILED
        return RunStatus.OK

    @property
    def exit_code(self) -> int:
        return self.status.value

    @property
    def failed_verdicts(self) -> Sequence[str]:
        return [name for name, ok in self.verdicts.items() if not ok]

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "source": self.source,
            "digest": self.digest,
            "outputs": to_jsonable(self.outputs),
            "verdicts": dict(self.verdicts),
            "status": self.status.name.lower(),
            "execution_time": round(self.execution_time_seconds, 6),
            "error": self.error,
            "error_type": self.error_type,
        }

    def summary(self) -> str:
        """Краткая сводка"""
        status = "✅ OK" if self.passed else "❌ FAILED"
        parts = [f"{self.command} {self.source}: {status}"]
        if self.error:
            parts.append(f"  Error: {self.error}")
        elif self.failed_verdicts:
            parts.append(f"  Failed verdicts: {', '.join(self.failed_verdicts)}")
        parts.append(f"  Time: {self.execution_time_seconds:.3f}s")
        return "\n".join(parts)


class InstanceCommand(ABC):
    """
    Команда над экземпляром из файла графа

    Каждая команда реализует execute(): решение + проверки.
    """

    def __init__(self, name: str, config: Optional[SolverConfig] = None):
        self.name = name
        self.config = resolve(config)

    @abstractmethod
    def execute(
        self,
        g: MultiGraph,
        c: Optional[Sequence[Fraction]]
    ) -> Tuple[Dict[str, Any], Dict[str, bool]]:
        """
        Выполнить команду

        Returns:
            (outputs, verdicts)
        """

    def run(self, source: str, text: str) -> RunReport:
        """Разобрать экземпляр, выполнить, собрать отчёт"""
        start = time.time()
        g, c = parse_graph(text)
        outputs, verdicts = self.execute(g, c)
        return RunReport(
            command=self.name,
            source=source,
            digest=instance_digest(g, c),
            outputs=outputs,
            verdicts=verdicts,
            execution_time_seconds=time.time() - start,
        )
