"""
Batch Orchestrator

Запуск одной команды по нескольким входным файлам.
С jobs > 1 файлы обрабатываются параллельно; порядок отчётов
совпадает с порядком входов.
"""

import asyncio
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from ..errors import KCoverError
from .base import InstanceCommand, RunReport

logger = logging.getLogger(__name__)


@dataclass
class BatchResult:
    """Результат запуска команды по всем входам"""
    reports: List[RunReport] = field(default_factory=list)
    total_execution_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failures(self) -> List[RunReport]:
        return [r for r in self.reports if not r.passed]

    @property
    def exit_code(self) -> int:
        """Худший код среди отчётов: 2 (ошибка) > 1 (проверка не прошла) > 0"""
        return max((r.exit_code for r in self.reports), default=0)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "exit_code": self.exit_code,
            "reports": [r.to_dict() for r in self.reports],
            "total_execution_time": round(self.total_execution_time, 6),
        }

    def summary(self) -> str:
        """Полная сводка по запуску"""
        lines = []

        status = "✅ BATCH PASSED" if self.passed else "❌ BATCH FAILED"
        lines.append(f"\n{'='*50}")
        lines.append(status)
        lines.append(f"{'='*50}")

        passed = sum(1 for r in self.reports if r.passed)
        lines.append(f"\nInstances: {passed}/{len(self.reports)} passed")
        lines.append(f"Time: {self.total_execution_time:.1f}s")

        lines.append("\n--- Reports ---")
        for report in self.reports:
            icon = "✅" if report.passed else "❌"
            lines.append(f"{icon} {report.source}: {report.execution_time_seconds:.3f}s")
            if report.error:
                lines.append(f"   🚨 {report.error}")
            elif report.failed_verdicts:
                lines.append(f"   Failed: {', '.join(report.failed_verdicts)}")

        lines.append(f"{'='*50}\n")
        return "\n".join(lines)


def read_source(source: str) -> str:
    return Path(source).read_text()


class BatchRunner:
    """
    Параллельный запуск команды по входным файлам

    Исключения превращаются в отчёты с ошибкой: один плохой файл
    не останавливает остальные.
    """

    def __init__(
        self,
        jobs: int = 1,
        reader: Callable[[str], str] = read_source
    ):
        """
        Args:
            jobs: Сколько файлов обрабатывать одновременно
            reader: Чтение входа по имени (для stdin и тестов)
        """
        if jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {jobs}")
        self.jobs = jobs
        self.reader = reader

        # Callbacks
        self.on_start: Optional[Callable[[str], None]] = None
        self.on_complete: Optional[Callable[[RunReport], None]] = None

    def _run_sync(self, command: InstanceCommand, source: str) -> RunReport:
        try:
            return command.run(source, self.reader(source))
        except (KCoverError, OSError) as e:
            return RunReport(
                command=command.name,
                source=source,
                error=str(e),
                error_type=type(e).__name__,
            )

    async def _run_one(
        self,
        command: InstanceCommand,
        source: str,
        semaphore: asyncio.Semaphore
    ) -> RunReport:
        async with semaphore:
            if self.on_start:
                self.on_start(source)

            report = await asyncio.to_thread(self._run_sync, command, source)

            if self.on_complete:
                self.on_complete(report)
            return report

    async def run(self, command: InstanceCommand, sources: Sequence[str]) -> BatchResult:
        """
        Запустить команду по всем входам

        Returns:
            BatchResult
        """
        start_time = time.time()
        semaphore = asyncio.Semaphore(self.jobs)

        tasks = [self._run_one(command, source, semaphore) for source in sources]
        results = await asyncio.gather(*tasks, return_exceptions=True)

        # Непредвиденные исключения (ошибки самих решателей)
        reports: List[RunReport] = []
        for source, result in zip(sources, results):
            if isinstance(result, Exception):
                logger.error("%s on %s crashed: %s", command.name, source, result)
                result = RunReport(
                    command=command.name,
                    source=source,
                    error=str(result),
                    error_type=type(result).__name__,
                )
            reports.append(result)

        return BatchResult(reports=reports, total_execution_time=time.time() - start_time)
