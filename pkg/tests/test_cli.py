"""
CLI and Runner Tests

Тесты пакетного запуска, отчётов и кодов выхода CLI.
"""

import io
import json
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from rich.console import Console

# Добавляем путь к модулям
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.formats import parse_graph, serialize_graph, write_graph
from src.generators import complete_graph, cycle_graph
from src.runner import BatchRunner, CoverCommand, InstanceCommand, RunReport, RunStatus, to_jsonable


TRIANGLE = "p graph 3 3 0\ne 0 1\ne 1 2\ne 0 2\n"


class FixedVerdictCommand(InstanceCommand):
    """Команда с заданным вердиктом (для проверки кодов выхода)"""

    def __init__(self, ok: bool):
        super().__init__("fixed")
        self.ok = ok

    def execute(self, g, c):
        return {"n": g.n}, {"fixed": self.ok}


class CrashingCommand(InstanceCommand):
    def __init__(self):
        super().__init__("crash")

    def execute(self, g, c):
        raise RuntimeError("solver bug")


@pytest.fixture
def cli():
    from src.cli import KCoverCLI
    return KCoverCLI(console=Console(file=io.StringIO(), width=120))


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.g"
    path.write_text(TRIANGLE)
    return str(path)


@pytest.fixture
def k5_file(tmp_path):
    path = tmp_path / "k5.g"
    write_graph(path, complete_graph(5))
    return str(path)


class TestRunReport:
    """Тесты отчёта о запуске"""

    def test_status_from_verdicts(self):
        """Тест статуса по проверкам и ошибке"""
        assert RunReport("cover", "a", verdicts={"x": True}).status is RunStatus.OK
        assert RunReport("cover", "a", verdicts={"x": False}).exit_code == 1
        assert RunReport("cover", "a", error="boom").exit_code == 2

    def test_jsonable(self):
        """Тест: рациональные — строки, множества — списки"""
        payload = to_jsonable({"cost": Fraction(3, 2), "I": frozenset({2, 0}), "ok": True})
        assert payload == {"cost": "3/2", "I": [0, 2], "ok": True}

    def test_command_run_sets_digest(self):
        """Тест запуска команды над текстом"""
        report = CoverCommand(1).run("triangle", TRIANGLE)
        assert report.passed
        assert report.outputs["size"] == 2
        assert len(report.digest) == 64


class TestBatchRunner:
    """Тесты параллельного запуска"""

    @pytest.fixture
    def sources(self):
        return {
            "triangle": TRIANGLE,
            "k4": serialize_graph(complete_graph(4)),
            "c5": serialize_graph(cycle_graph(5)),
        }

    @pytest.mark.asyncio
    async def test_order_preserved(self, sources):
        """Тест: порядок отчётов совпадает с порядком входов"""
        runner = BatchRunner(jobs=3, reader=sources.__getitem__)
        result = await runner.run(CoverCommand(1), list(sources))

        assert [r.source for r in result.reports] == list(sources)
        assert result.passed
        assert result.exit_code == 0

    @pytest.mark.asyncio
    async def test_callbacks(self, sources):
        """Тест callback-ов начала и завершения"""
        started, completed = [], []
        runner = BatchRunner(jobs=2, reader=sources.__getitem__)
        runner.on_start = started.append
        runner.on_complete = completed.append

        await runner.run(CoverCommand(1), list(sources))
        assert sorted(started) == sorted(sources)
        assert len(completed) == 3

    @pytest.mark.asyncio
    async def test_verdict_failure_exit_code(self, sources):
        """Тест: невыполненная проверка даёт код 1"""
        runner = BatchRunner(reader=sources.__getitem__)
        result = await runner.run(FixedVerdictCommand(False), ["triangle"])
        assert result.exit_code == 1
        assert result.failures[0].failed_verdicts == ["fixed"]

    @pytest.mark.asyncio
    async def test_errors_do_not_stop_batch(self, sources):
        """Тест: ошибка одного входа не останавливает остальные"""
        sources["bad"] = "p graph 2 1 0\ne 0 5\n"
        runner = BatchRunner(reader=sources.__getitem__)
        result = await runner.run(CoverCommand(1), ["triangle", "bad", "k4"])

        assert [r.status for r in result.reports] == [RunStatus.OK, RunStatus.ERROR, RunStatus.OK]
        assert result.reports[1].error_type == "FormatError"
        assert result.exit_code == 2

    @pytest.mark.asyncio
    async def test_unexpected_exception(self, sources):
        """Тест: непредвиденное исключение превращается в отчёт"""
        runner = BatchRunner(reader=sources.__getitem__)
        result = await runner.run(CrashingCommand(), ["triangle"])
        assert result.reports[0].error_type == "RuntimeError"
        assert result.exit_code == 2

    def test_invalid_jobs(self):
        """Тест jobs < 1"""
        with pytest.raises(ValueError):
            BatchRunner(jobs=0)


class TestCLI:
    """Тесты команд CLI"""

    @pytest.mark.asyncio
    async def test_cover_json(self, cli, triangle_file, capsys):
        """Тест cover --json"""
        code = await cli.main(["cover", "--l", "1", "--k", "2", triangle_file, "--json"])
        payload = json.loads(capsys.readouterr().out)

        assert code == 0
        assert payload["outputs"]["size"] == 2
        assert payload["outputs"]["bound"]["value"] == "2"
        assert payload["verdicts"]["bound"]
        assert payload["status"] == "ok"

    @pytest.mark.asyncio
    async def test_kcs_with_oracle(self, cli, k5_file, capsys):
        """Тест kcs --oracle на K5"""
        code = await cli.main(["kcs", "--k", "3", "--oracle", k5_file, "--json"])
        payload = json.loads(capsys.readouterr().out)

        assert code == 0
        certificates = payload["outputs"]["solution"]["ratio_certificates"]
        assert certificates["opt"] == "8"
        assert certificates["opt_source"] == "oracle"
        assert payload["verdicts"]["ratio_improved"]

    @pytest.mark.asyncio
    async def test_max_conn(self, cli, tmp_path, capsys):
        """Тест max-conn --oracle на K4"""
        path = tmp_path / "k4.g"
        write_graph(path, complete_graph(4))
        code = await cli.main(["max-conn", "--m", "5", "--oracle", str(path), "--json"])
        payload = json.loads(capsys.readouterr().out)

        assert code == 0
        assert payload["outputs"]["k_star"] == 2
        assert payload["verdicts"]["guarantee"]

    @pytest.mark.asyncio
    async def test_verify_thm1(self, cli, triangle_file, capsys):
        """Тест verify-thm1 на треугольнике"""
        code = await cli.main(["verify-thm1", "--k", "2", "--l", "1", triangle_file, "--json"])
        payload = json.loads(capsys.readouterr().out)

        assert code == 0
        assert payload["outputs"]["mu"] == "2/3"
        assert payload["outputs"]["case"] == "odd-small"

    @pytest.mark.asyncio
    async def test_verify_thm1_vector_file(self, cli, triangle_file, tmp_path, capsys):
        """Тест --x с файлом вектора"""
        vector = tmp_path / "x.txt"
        vector.write_text("1 1 1\n")
        code = await cli.main(
            ["verify-thm1", "--k", "2", "--l", "1", "--x", str(vector), triangle_file, "--json"]
        )
        assert code == 0
        capsys.readouterr()

    @pytest.mark.asyncio
    async def test_hypothesis_failure_is_error(self, cli, tmp_path, capsys):
        """Тест: x вне P^f_con — ошибка ввода, код 2"""
        path = tmp_path / "c5.g"
        write_graph(path, cycle_graph(5))
        code = await cli.main(["verify-thm1", "--k", "3", "--l", "1", str(path), "--json"])
        payload = json.loads(capsys.readouterr().out)

        assert code == 2
        assert payload["error_type"] == "HypothesisError"

    @pytest.mark.asyncio
    async def test_config_file(self, cli, triangle_file, tmp_path, capsys):
        """Тест YAML конфига: предел перебора"""
        config = tmp_path / "solver.yaml"
        config.write_text("solver:\n  enum_max_nodes: 2\n")
        code = await cli.main(
            ["verify-thm1", "--k", "2", "--l", "1", triangle_file, "--config", str(config), "--json"]
        )
        payload = json.loads(capsys.readouterr().out)
        assert code == 2
        assert payload["error_type"] == "InstanceTooLargeError"

    @pytest.mark.asyncio
    async def test_cover_cost_needs_costs(self, cli, triangle_file, capsys):
        """Тест cover-cost на файле без стоимостей: ошибка, код 2"""
        code = await cli.main(["cover-cost", "--l", "1", triangle_file, "--json"])
        payload = json.loads(capsys.readouterr().out)

        assert code == 2
        assert payload["error_type"] == "ParameterError"
        assert "no edge costs" in payload["error"]

    @pytest.mark.asyncio
    async def test_cover_cost_with_costs(self, cli, tmp_path, capsys):
        """Тест cover-cost: стоимости берутся из файла"""
        path = tmp_path / "costed.g"
        path.write_text("p graph 3 3 0\ne 0 1 2\ne 1 2 1\ne 0 2 1/2\n")
        code = await cli.main(["cover-cost", "--l", "1", str(path), "--json"])
        payload = json.loads(capsys.readouterr().out)

        assert code == 0
        assert payload["outputs"]["cost"] == "3/2"

    @pytest.mark.asyncio
    async def test_max_enum_flag(self, cli, triangle_file, capsys):
        """Тест --max-enum поверх конфига"""
        code = await cli.main(
            ["verify-thm1", "--k", "2", "--l", "1", triangle_file, "--max-enum", "2", "--json"]
        )
        capsys.readouterr()
        assert code == 2

    @pytest.mark.asyncio
    async def test_batch_json(self, cli, triangle_file, k5_file, capsys):
        """Тест нескольких файлов: отчёт пакета"""
        code = await cli.main(["conn", triangle_file, k5_file, "--json", "-j", "2"])
        payload = json.loads(capsys.readouterr().out)

        assert code == 0
        assert len(payload["reports"]) == 2
        assert payload["reports"][1]["outputs"]["node"]["value"] == "4"

    @pytest.mark.asyncio
    async def test_malformed_file(self, cli, tmp_path, capsys):
        """Тест файла с ошибкой формата"""
        path = tmp_path / "bad.g"
        path.write_text("p graph 2 1 0\ne 0 0\n")
        code = await cli.main(["cover", "--l", "1", str(path), "--json"])
        payload = json.loads(capsys.readouterr().out)

        assert code == 2
        assert payload["error"].startswith("line 2:")

    @pytest.mark.asyncio
    async def test_missing_file(self, cli, tmp_path, capsys):
        """Тест отсутствующего файла"""
        code = await cli.main(["conn", str(tmp_path / "nope.g"), "--json"])
        capsys.readouterr()
        assert code == 2

    @pytest.mark.asyncio
    async def test_table_output(self, cli, triangle_file):
        """Тест табличного вывода"""
        code = await cli.main(["cover", "--l", "1", triangle_file])
        assert code == 0
        assert "is_cover" in cli.console.file.getvalue()

    @pytest.mark.asyncio
    async def test_usage_errors(self, cli, capsys):
        """Тест ошибок использования"""
        assert await cli.main(["cover", "--l", "x", "a.g"]) == 2
        assert await cli.main(["no-such-command"]) == 2
        assert await cli.main(["gen"]) == 2
        assert await cli.main(["oracle"]) == 2
        capsys.readouterr()

    @pytest.mark.asyncio
    async def test_help(self, cli, capsys):
        """Тест --help: код 0"""
        assert await cli.main(["--help"]) == 0
        assert "kcover" in capsys.readouterr().out


class TestGenerateCommand:
    """Тесты kcover gen"""

    @pytest.mark.asyncio
    async def test_harary(self, cli, capsys):
        """Тест gen harary"""
        code = await cli.main(["gen", "harary", "--k", "3", "--n", "6"])
        g, costs = parse_graph(capsys.readouterr().out)

        assert code == 0
        assert (g.n, g.m) == (6, 9)
        assert costs is None

    @pytest.mark.asyncio
    async def test_random_is_deterministic(self, cli, capsys):
        """Тест: одинаковый seed — одинаковый вывод"""
        argv = ["gen", "random", "--n", "7", "--k", "3", "--extra", "4", "--seed", "5", "--costs"]
        await cli.main(argv)
        first = capsys.readouterr().out
        await cli.main(argv)
        assert capsys.readouterr().out == first

    @pytest.mark.asyncio
    async def test_beta(self, cli, capsys):
        """Тест gen beta"""
        code = await cli.main(["gen", "beta", "--n", "5", "--beta", "3/4", "--seed", "1"])
        g, costs = parse_graph(capsys.readouterr().out)
        assert code == 0
        assert g.m == 10
        assert all(1 <= c <= Fraction(3, 2) for c in costs)

    @pytest.mark.asyncio
    async def test_invalid_parameters(self, cli, capsys):
        """Тест недопустимых параметров генератора"""
        code = await cli.main(["gen", "harary", "--k", "6", "--n", "6"])
        capsys.readouterr()
        assert code == 2


class TestOracleCommand:
    """Тесты kcover oracle"""

    @pytest.mark.asyncio
    async def test_oracle_kcs(self, cli, k5_file, capsys):
        """Тест oracle kcs на K5"""
        code = await cli.main(["oracle", "kcs", "--k", "3", k5_file, "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert payload["outputs"]["opt"] == "8"

    @pytest.mark.asyncio
    async def test_oracle_cover(self, cli, triangle_file, capsys):
        """Тест oracle cover на треугольнике"""
        code = await cli.main(["oracle", "cover", "--l", "1", triangle_file, "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert payload["outputs"]["cost"] == "2"
        assert payload["outputs"]["witness"] == [0, 1]
