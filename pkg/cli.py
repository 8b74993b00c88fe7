"""
Командная строка cutcomplex.

Коды возврата: 0 - все проверки пройдены, 1 - есть расхождение,
2 - ошибка использования или некорректный ввод, 3 - лимит ресурсов
не дал проверить ни одного случая.
"""

from typing import Optional, Sequence

import argparse
import json
import logging
import sys

import pandas as pd

from core.config import settings
from core.errors import InvalidInputError, ResourceCapExceeded
from domain.complexes import save_complex
from models.complex import CutVariant
from models.harness import CheckProperty, ConjectureId, SuiteId, TableFamily, TableFormat, to_enum
from services.complex_processor import ComplexProcessor
from services.harness import emit_table, parse_ranges, run_suite, sweep_conjecture

logger = logging.getLogger("cutcomplex")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _print_json(payload) -> None:
    print(json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True))


def _add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph", required=True, help="Спецификация семейства (prism:5, grid:3,4) или путь к файлу графа")
    parser.add_argument("--k", type=int, required=True, help="Размер независимых множеств")


def cmd_build(args: argparse.Namespace) -> int:
    processor = ComplexProcessor()
    resolved = processor.resolve_graph(args.graph)
    variant = to_enum(CutVariant, args.variant, "варианта комплекса")
    if args.out:
        save_complex(processor.build(resolved.graph, args.k, variant), args.out)
        logger.info("Комплекс записан в %s", args.out)
        return EXIT_OK
    _print_json(processor.build_response(resolved.graph, args.k, variant).model_dump(mode="json"))
    return EXIT_OK


def cmd_homology(args: argparse.Namespace) -> int:
    processor = ComplexProcessor()
    resolved = processor.resolve_graph(args.graph)
    report = processor.homology(resolved.graph, args.k, snf=args.snf)
    if args.json:
        payload = report.to_payload(resolved.graph.n, args.k)
        if args.snf:
            payload["torsion_primes"] = report.torsion_primes
        _print_json(payload)
        return EXIT_OK
    if report.void:
        print("Комплекс пуст (void)")
        return EXIT_OK
    print(f"Размерность: {report.dimension}, f = {report.f}")
    nonzero = report.nonzero()
    print("Приведенные числа Бетти: " + (", ".join(f"β_{d}={b}" for d, b in nonzero.items()) or "все нули"))
    print(f"χ̃ = {report.euler_reduced}")
    if args.snf:
        print(f"Кручение: {report.torsion_primes or 'нет'}")
    return EXIT_OK


def cmd_morse(args: argparse.Namespace) -> int:
    processor = ComplexProcessor()
    resolved = processor.resolve_graph(args.graph)
    report = processor.morse(resolved, args.k, args.schedule, verify=args.verify_acyclic)
    if args.json:
        _print_json(report.model_dump(mode="json"))
    else:
        print(f"Расписание: {report.schedule}")
        print(f"Пар: {report.matched_pairs}, критические клетки: {report.cells_per_dim}")
        print(f"Пустая грань сопоставлена: {report.empty_matched}")
        if report.acyclic is not None:
            print(f"Ацикличность проверена: {report.acyclic}")
        print(f"Вывод: {report.describe()}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    processor = ComplexProcessor()
    resolved = processor.resolve_graph(args.graph)
    prop = to_enum(CheckProperty, args.property, "свойства")
    _print_json(processor.check(resolved.graph, args.k, prop, facet_cap=args.facet_cap).model_dump(mode="json"))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    suite_id = to_enum(SuiteId, args.suite, "набора проверок")
    result = run_suite(suite_id, parse_ranges(args.ranges), workers=args.workers)
    if args.json:
        print(result.canonical_json())
    else:
        rows = [
            [
                ", ".join(f"{key}={value}" for key, value in case.params.items()),
                "skip" if case.skipped else ("ok" if case.passed else "FAIL"),
                case.note or "",
            ]
            for case in result.cases
        ]
        print(pd.DataFrame(rows, columns=["параметры", "итог", "примечание"]).to_string(index=False))
        print(
            f"\n{result.suite_id}: проверено {result.verified_count}, "
            f"расхождений {result.failed_count}, пропущено {result.skipped_count}, {result.runtime_ms} мс"
        )
    if result.failed_count:
        return EXIT_MISMATCH
    if result.verified_count == 0 and result.skipped_count:
        return EXIT_CAP
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    conjecture = to_enum(ConjectureId, args.conjecture, "гипотезы")
    rows = sweep_conjecture(conjecture, parse_ranges(args.ranges))
    if args.json:
        _print_json([row.model_dump(mode="json") for row in rows])
        return EXIT_OK
    table = []
    for row in rows:
        predicted = "; ".join(
            f"{p.branch}: void" if p.void else f"{p.branch}: β_{p.dimension}={p.count}"
            for p in row.predictions
        )
        observed = "skipped" if row.skipped else ("void" if row.observed_void else row.observed)
        table.append([row.params, observed, predicted, "ok" if row.match else "-"])
    print(pd.DataFrame(table, columns=["параметры", "наблюдение", "предсказание", "совпадение"]).to_string(index=False))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    family = to_enum(TableFamily, args.family, "семейства таблицы")
    fmt = to_enum(TableFormat, args.format, "формата таблицы")
    print(emit_table(family, args.kmax, args.nmax, fmt, kmin=args.kmin, nmin=args.nmin))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutcomplex", description="Тотальные k-разрезные комплексы графов")
    parser.add_argument("--log-level", default=settings.LOG_LEVEL, help="Уровень логирования")
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="Фасеты комплекса")
    _add_graph_arguments(build)
    build.add_argument("--variant", default=CutVariant.TOTAL.value, choices=[v.value for v in CutVariant])
    build.add_argument("--out", help="Записать комплекс в файл вместо вывода JSON")
    build.set_defaults(handler=cmd_build)

    homology = sub.add_parser("homology", help="Приведенные числа Бетти")
    _add_graph_arguments(homology)
    homology.add_argument("--snf", action="store_true", help="Нормальная форма Смита над ℤ и проверка кручения")
    homology.add_argument("--json", action="store_true")
    homology.set_defaults(handler=cmd_homology)

    morse = sub.add_parser("morse", help="Элементные паросочетания и сертификат Морса")
    _add_graph_arguments(morse)
    morse.add_argument("--schedule", default="lex", help="lex, preset или вершины через запятую")
    morse.add_argument("--verify-acyclic", action="store_true", help="Проверить ацикличность паросочетания")
    morse.add_argument("--json", action="store_true")
    morse.set_defaults(handler=cmd_morse)

    check = sub.add_parser("check", help="Структурные свойства комплекса")
    _add_graph_arguments(check)
    check.add_argument("--property", required=True, choices=[p.value for p in CheckProperty])
    check.add_argument("--facet-cap", type=int, default=None)
    check.set_defaults(handler=cmd_check)

    verify = sub.add_parser("verify", help="Набор проверок утверждения")
    verify.add_argument("--suite", required=True, choices=[s.value for s in SuiteId])
    verify.add_argument("--ranges", default=None, help="Например n=2..6,k=2..5")
    verify.add_argument("--workers", type=int, default=None)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    sweep = sub.add_parser("sweep", help="Свип гипотезы")
    sweep.add_argument("--conjecture", required=True, choices=[c.value for c in ConjectureId])
    sweep.add_argument("--ranges", default=None)
    sweep.add_argument("--json", action="store_true")
    sweep.set_defaults(handler=cmd_sweep)

    table = sub.add_parser("table", help="Таблица чисел Бетти решеток")
    table.add_argument("--family", required=True, choices=[f.value for f in TableFamily])
    table.add_argument("--kmax", type=int, required=True)
    table.add_argument("--nmax", type=int, required=True)
    table.add_argument("--kmin", type=int, default=1)
    table.add_argument("--nmin", type=int, default=None)
    table.add_argument("--format", default=TableFormat.TEXT.value, choices=[f.value for f in TableFormat])
    table.set_defaults(handler=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        return args.handler(args)
    except InvalidInputError as e:
        logger.error("Некорректный ввод: %s", e)
        return EXIT_USAGE
    except ResourceCapExceeded as e:
        logger.error("%s", e)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
