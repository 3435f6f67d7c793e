#!/usr/bin/env python3
"""
kcover CLI

Единая точка входа: решатели покрытий и k-связных подграфов,
проверка теоремы о масштабировании, генераторы и оракулы.

Коды выхода: 0 — успех, 1 — не прошла проверка, 2 — ошибка ввода или использования.
"""

import argparse
import asyncio
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table
from rich.text import Text

# Добавляем путь к модулям
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config import SolverConfig, load_config
from src.errors import KCoverError
from src.formats.graph_file import serialize_graph
from src.generators.instances import beta_metric_instance, harary, random_costs, random_k_edge_connected
from src.runner import (
    BatchResult,
    BatchRunner,
    ConnCommand,
    CoverCommand,
    InstanceCommand,
    KcsCommand,
    KcsRelaxedCommand,
    MaxConnCommand,
    OracleCoverCommand,
    OracleKcsCommand,
    OracleMaxConnCommand,
    RunReport,
    VerifyTheorem1Command,
    to_jsonable,
)

EXIT_OK = 0
EXIT_USAGE = 2


def read_input(source: str) -> str:
    """Имя файла или "-" для stdin"""
    return sys.stdin.read() if source == "-" else Path(source).read_text()


def setup_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


class KCoverCLI:
    """CLI для kcover-toolkit"""

    def __init__(self, console: Optional[Console] = None):
        self.parser = self._create_parser()
        self.console = console or Console()

    def _add_instance_options(self, parser: argparse.ArgumentParser):
        """Общие флаги команд над экземплярами"""
        parser.add_argument(
            "files",
            nargs="+",
            help="Файлы графов ('-' = stdin)"
        )
        parser.add_argument(
            "--json",
            action="store_true",
            help="Машиночитаемый отчёт"
        )
        parser.add_argument(
            "--jobs", "-j",
            type=int,
            help="Сколько файлов обрабатывать параллельно"
        )
        parser.add_argument(
            "--max-enum",
            type=int,
            help="Предел n для перебора ограничений и разрезов"
        )
        parser.add_argument(
            "--oracle-max-edges",
            type=int,
            help="Предел |E| для оракулов полного перебора"
        )
        self._add_common_options(parser)

    def _add_common_options(self, parser: argparse.ArgumentParser):
        parser.add_argument(
            "--config",
            help="YAML конфиг (секция solver:)"
        )
        parser.add_argument(
            "--verbose", "-v",
            action="store_true",
            help="Подробный вывод (DEBUG)"
        )

    def _create_parser(self) -> argparse.ArgumentParser:
        """Создать парсер аргументов"""
        parser = argparse.ArgumentParser(
            prog="kcover",
            description="🧮 kcover - малые ℓ-рёберные покрытия и k-связные подграфы",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            epilog="""
Примеры:
  kcover cover --l 1 --k 2 triangle.g
  kcover kcs --k 3 k5.g --oracle
  kcover verify-thm1 --k 2 --l 1 --x ones triangle.g
  kcover gen harary --k 3 --n 6 > h36.g
  kcover oracle kcs --k 3 k5.g

Команды:
  cover, cover-cost  - минимальное ℓ-покрытие по размеру / стоимости и оценки
  kcs, kcs-relaxed   - k-связный остовный подграф и ослабленный вариант
  max-conn           - максимальная связность при бюджете m рёбер
  conn               - рёберная и узловая связность
  verify-thm1        - проверка масштабирования в многогранник покрытий
  gen                - генераторы экземпляров
  oracle             - эталонные решатели полным перебором
"""
        )

        subparsers = parser.add_subparsers(dest="command", help="Команды")

        # cover / cover-cost
        for name, help_text in (
            ("cover", "Минимальное ℓ-покрытие по размеру"),
            ("cover-cost", "Минимальное ℓ-покрытие по стоимости"),
        ):
            cover_parser = subparsers.add_parser(name, help=help_text)
            cover_parser.add_argument("--l", dest="ell", type=int, required=True, help="Требуемая степень ℓ")
            cover_parser.add_argument("--k", type=int, help="Связность для оценок стоимости")
            self._add_instance_options(cover_parser)

        # kcs
        kcs_parser = subparsers.add_parser("kcs", help="k-связный остовный подграф")
        kcs_parser.add_argument("--k", type=int, required=True, help="Требуемая связность")
        kcs_parser.add_argument("--oracle", action="store_true", help="Проверить гарантии против точного opt")
        kcs_parser.add_argument("--beta", help="β для β-метрической гарантии (например 2/3)")
        self._add_instance_options(kcs_parser)

        # kcs-relaxed
        relaxed_parser = subparsers.add_parser("kcs-relaxed", help="(k−1)-связный подграф не больше opt(k)")
        relaxed_parser.add_argument("--k", type=int, required=True, help="Связность k >= 2")
        relaxed_parser.add_argument("--oracle", action="store_true", help="Сравнить с точным opt(k)")
        self._add_instance_options(relaxed_parser)

        # max-conn
        budget_parser = subparsers.add_parser("max-conn", help="Максимальная связность при бюджете")
        budget_parser.add_argument("--m", type=int, required=True, help="Бюджет рёбер")
        budget_parser.add_argument("--oracle", action="store_true", help="Проверить k >= k* − 1")
        self._add_instance_options(budget_parser)

        # conn
        conn_parser = subparsers.add_parser("conn", help="Рёберная и узловая связность")
        self._add_instance_options(conn_parser)

        # verify-thm1
        verify_parser = subparsers.add_parser("verify-thm1", help="Проверить масштабирование x")
        verify_parser.add_argument("--k", type=int, required=True, help="Связность x")
        verify_parser.add_argument("--l", dest="ell", type=int, required=True, help="Степень покрытия ℓ")
        verify_parser.add_argument("--x", default="ones", help="'ones' или файл с вектором x")
        verify_parser.add_argument(
            "--exhaustive",
            action="store_true",
            help="Перебирать все F ⊆ δ(S)"
        )
        self._add_instance_options(verify_parser)

        # gen
        gen_parser = subparsers.add_parser("gen", help="Сгенерировать экземпляр")
        gen_sub = gen_parser.add_subparsers(dest="family", help="Семейство")

        harary_parser = gen_sub.add_parser("harary", help="Граф Харари H(k, n)")
        harary_parser.add_argument("--k", type=int, required=True)
        harary_parser.add_argument("--n", type=int, required=True)
        self._add_common_options(harary_parser)

        random_parser = gen_sub.add_parser("random", help="Случайный k-рёберно-связный мультиграф")
        random_parser.add_argument("--n", type=int, required=True)
        random_parser.add_argument("--k", type=int, required=True)
        random_parser.add_argument("--extra", type=int, default=0)
        random_parser.add_argument("--seed", type=int, default=0)
        random_parser.add_argument("--directed", action="store_true")
        random_parser.add_argument("--simple", action="store_true", help="Без параллельных рёбер")
        random_parser.add_argument("--costs", action="store_true", help="Добавить случайные стоимости")
        self._add_common_options(random_parser)

        beta_parser = gen_sub.add_parser("beta", help="K_n с β-метрическими стоимостями")
        beta_parser.add_argument("--n", type=int, required=True)
        beta_parser.add_argument("--beta", required=True, help="β из [1/2, 1), например 3/4")
        beta_parser.add_argument("--seed", type=int, default=0)
        self._add_common_options(beta_parser)

        # oracle
        oracle_parser = subparsers.add_parser("oracle", help="Эталонные решатели перебором")
        oracle_sub = oracle_parser.add_subparsers(dest="oracle_kind", help="Задача")

        oracle_cover = oracle_sub.add_parser("cover", help="Минимальное ℓ-покрытие")
        oracle_cover.add_argument("--l", dest="ell", type=int, required=True)
        self._add_instance_options(oracle_cover)

        oracle_kcs = oracle_sub.add_parser("kcs", help="opt k-связного подграфа")
        oracle_kcs.add_argument("--k", type=int, required=True)
        self._add_instance_options(oracle_kcs)

        oracle_budget = oracle_sub.add_parser("max-conn", help="k* при бюджете m")
        oracle_budget.add_argument("--m", type=int, required=True)
        self._add_instance_options(oracle_budget)

        return parser

    def _load_config(self, args) -> SolverConfig:
        return load_config(
            args.config,
            jobs=getattr(args, "jobs", None),
            enum_max_nodes=getattr(args, "max_enum", None),
            oracle_max_edges=getattr(args, "oracle_max_edges", None),
        )

    def build_command(self, args, config: SolverConfig) -> InstanceCommand:
        """Команда над экземпляром по разобранным аргументам"""
        if args.command in ("cover", "cover-cost"):
            return CoverCommand(args.ell, args.k, use_costs=args.command == "cover-cost", config=config)
        if args.command == "kcs":
            beta = None if args.beta is None else Fraction(args.beta)
            return KcsCommand(args.k, oracle=args.oracle, beta=beta, config=config)
        if args.command == "kcs-relaxed":
            return KcsRelaxedCommand(args.k, oracle=args.oracle, config=config)
        if args.command == "max-conn":
            return MaxConnCommand(args.m, oracle=args.oracle, config=config)
        if args.command == "conn":
            return ConnCommand(config=config)
        if args.command == "verify-thm1":
            x_text = None if args.x == "ones" else Path(args.x).read_text()
            return VerifyTheorem1Command(args.k, args.ell, x_text, args.exhaustive, config=config)
        if args.command == "oracle":
            if args.oracle_kind == "cover":
                return OracleCoverCommand(args.ell, config=config)
            if args.oracle_kind == "kcs":
                return OracleKcsCommand(args.k, config=config)
            if args.oracle_kind == "max-conn":
                return OracleMaxConnCommand(args.m, config=config)
        raise ValueError(f"Unknown command: {args.command}")

    def print_report(self, report: RunReport):
        """Таблица результатов одного экземпляра"""
        icon = "✅" if report.passed else "❌"
        table = Table(title=f"{icon} {report.command}: {report.source}", show_lines=False)
        table.add_column("Field", style="cyan")
        table.add_column("Value")

        for key, value in to_jsonable(report.outputs).items():
            text = value if isinstance(value, str) else json.dumps(value, ensure_ascii=False)
            table.add_row(key, Text(text))
        for name, ok in report.verdicts.items():
            table.add_row(f"{'✅' if ok else '❌'} {name}", "ok" if ok else "FAILED")
        if report.error:
            table.add_row("🚨 error", Text(f"{report.error_type}: {report.error}", style="red"))
        table.add_row("time", f"{report.execution_time_seconds:.3f}s")

        self.console.print(table)

    def print_batch(self, result: BatchResult, as_json: bool):
        if as_json:
            payload = result.reports[0].to_dict() if len(result.reports) == 1 else result.to_dict()
            sys.stdout.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
            return

        for report in result.reports:
            self.print_report(report)
        if len(result.reports) > 1:
            self.console.print(result.summary())

    async def run_instances(self, args) -> int:
        """Выполнить команду над всеми входными файлами"""
        try:
            config = self._load_config(args)
            command = self.build_command(args, config)
        except (KCoverError, OSError, ValueError) as e:
            self.console.print(Text(f"❌ {e}"))
            return EXIT_USAGE

        runner = BatchRunner(jobs=config.jobs, reader=read_input)
        if args.verbose:
            runner.on_start = lambda source: logging.getLogger(__name__).debug("⏳ %s", source)

        result = await runner.run(command, args.files)
        self.print_batch(result, args.json)
        return result.exit_code

    def generate(self, args) -> int:
        """Сгенерировать экземпляр и вывести в формате графа"""
        try:
            config = load_config(args.config)
            if args.family == "harary":
                g, costs = harary(args.k, args.n), None
            elif args.family == "random":
                g = random_k_edge_connected(
                    args.n, args.k, args.extra, args.seed,
                    directed=args.directed, simple=args.simple,
                )
                costs = random_costs(g, args.seed, config=config) if args.costs else None
            else:
                instance = beta_metric_instance(args.n, Fraction(args.beta), args.seed, config)
                g, costs = instance.graph, instance.costs
        except (KCoverError, OSError, ValueError) as e:
            self.console.print(Text(f"❌ {e}"))
            return EXIT_USAGE

        sys.stdout.write(serialize_graph(g, costs))
        return EXIT_OK

    async def main(self, argv: Optional[List[str]] = None) -> int:
        """Главная точка входа"""
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_USAGE if e.code else EXIT_OK

        if not args.command:
            self.parser.print_help()
            return EXIT_OK

        setup_logging(getattr(args, "verbose", False))

        if args.command == "gen":
            if not args.family:
                self.parser.print_help()
                return EXIT_USAGE
            return self.generate(args)
        if args.command == "oracle" and not args.oracle_kind:
            self.parser.print_help()
            return EXIT_USAGE
        return await self.run_instances(args)


def main(argv: Optional[List[str]] = None):
    """Entry point"""
    cli = KCoverCLI()
    exit_code = asyncio.run(cli.main(argv))
    sys.exit(exit_code)


if __name__ == "__main__":
    main()
