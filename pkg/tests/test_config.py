"""
Config Tests

Тесты загрузки конфигурации решателей.
"""

import sys
from pathlib import Path

# Добавляем путь к модулям
sys.path.insert(0, str(Path(__file__).parent.parent))

import src.config as config_module
from src.config import DEFAULT_CONFIG_PATH, SolverConfig, load_config


class TestLoadConfig:
    """Тесты load_config"""

    def test_shipped_file_matches_defaults(self):
        """Тест: configs/solver.yaml совпадает со значениями по умолчанию"""
        assert DEFAULT_CONFIG_PATH.is_file()
        assert load_config(DEFAULT_CONFIG_PATH) == SolverConfig()

    def test_falls_back_to_default_file(self, tmp_path, monkeypatch):
        """Тест: без пути читается файл по умолчанию"""
        path = tmp_path / "solver.yaml"
        path.write_text("solver:\n  enum_max_nodes: 5\n  jobs: 3\n")
        monkeypatch.setattr(config_module, "DEFAULT_CONFIG_PATH", path)

        config = load_config()
        assert config.enum_max_nodes == 5
        assert config.jobs == 3
        assert config.bnb_max_edges == SolverConfig().bnb_max_edges

    def test_missing_default_file(self, tmp_path, monkeypatch):
        """Тест: нет файла по умолчанию — встроенные значения"""
        monkeypatch.setattr(config_module, "DEFAULT_CONFIG_PATH", tmp_path / "absent.yaml")
        assert load_config() == SolverConfig()

    def test_overrides_win(self, tmp_path, monkeypatch):
        """Тест: kwargs поверх файла, None игнорируется"""
        path = tmp_path / "solver.yaml"
        path.write_text("solver:\n  oracle_max_edges: 12\n")
        monkeypatch.setattr(config_module, "DEFAULT_CONFIG_PATH", path)

        config = load_config(oracle_max_edges=14, jobs=None)
        assert config.oracle_max_edges == 14
        assert config.jobs == 1

    def test_frac_enum_threshold(self):
        """Тест порога перебора дробных разрезов"""
        assert SolverConfig().frac_enum_max_nodes == 20
