"""
Solver Configuration

Лимиты перебора и параметры генераторов.
Значения по умолчанию переопределяются секцией `solver:` YAML-файла.
"""

from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml


@dataclass(frozen=True)
class SolverConfig:
    """Конфигурация решателей"""
    # Branch-and-bound для взвешенного покрытия
    bnb_max_edges: int = 24

    # Перебор ограничений семейства (2)
    enum_max_nodes: int = 10
    enum_max_cut_edges: int = 16

    # Дробные разрезы: перебор масок до этого n, дальше Stoer–Wagner
    frac_enum_max_nodes: int = 20

    # Оракулы полного перебора
    oracle_max_edges: int = 20

    # Генераторы
    cost_denominator: int = 1024

    # CLI
    jobs: int = 1

    def with_overrides(self, **kwargs) -> "SolverConfig":
        """Копия с заменой известных полей (None игнорируется)"""
        known = {f.name for f in fields(self)}
        updates = {k: v for k, v in kwargs.items() if k in known and v is not None}
        return replace(self, **updates)

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


DEFAULT_CONFIG = SolverConfig()

DEFAULT_CONFIG_PATH = Path(__file__).parent.parent / "configs" / "solver.yaml"


def load_config(
    config_path: Optional[Union[str, Path]] = None,
    **kwargs
) -> SolverConfig:
    """
    Загрузить конфигурацию

    Args:
        config_path: Путь к YAML конфигу (None = configs/solver.yaml, если он есть)
        **kwargs: Override параметры, применяются поверх файла

    Returns:
        SolverConfig
    """
    config = DEFAULT_CONFIG
    if config_path is None and DEFAULT_CONFIG_PATH.is_file():
        config_path = DEFAULT_CONFIG_PATH

    if config_path:
        with open(config_path) as f:
            yaml_config = yaml.safe_load(f) or {}
        config = config.with_overrides(**(yaml_config.get("solver") or {}))

    return config.with_overrides(**kwargs)


def resolve(config: Optional[SolverConfig]) -> SolverConfig:
    return config if config is not None else DEFAULT_CONFIG
