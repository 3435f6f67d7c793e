"""
Runner Module

Команды над экземплярами, отчёты и параллельный запуск по файлам.
"""

from .base import InstanceCommand, RunReport, RunStatus, to_jsonable
from .commands import (
    ConnCommand,
    CoverCommand,
    KcsCommand,
    KcsRelaxedCommand,
    MaxConnCommand,
    OracleCoverCommand,
    OracleKcsCommand,
    OracleMaxConnCommand,
    VerifyTheorem1Command,
)
from .orchestrator import BatchResult, BatchRunner

__all__ = [
    # Base
    "InstanceCommand",
    "RunReport",
    "RunStatus",
    "to_jsonable",
    # Commands
    "CoverCommand",
    "KcsCommand",
    "KcsRelaxedCommand",
    "MaxConnCommand",
    "ConnCommand",
    "VerifyTheorem1Command",
    "OracleCoverCommand",
    "OracleKcsCommand",
    "OracleMaxConnCommand",
    # Orchestrator
    "BatchRunner",
    "BatchResult",
]
