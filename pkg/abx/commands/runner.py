"""
Прогон проверочного набора на корпусе.

Экземпляры независимы, поэтому корпус раздаётся пулу процессов
(не больше ABX_THREADS), а результаты сортируются по instance_id:
отчёт зависит только от (suite, n, count, seed, j).
"""

import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from pydantic import BaseModel, Field
from tqdm import tqdm

from abx.appstate import THREADS
from abx.commands.config import OutputFormat, SuiteConfig
from abx.commands.corpus import Instance, generate_corpus
from abx.commands.suites import get_suite
from abx.exactgeom import format_rational
from abx.exception import ConfigurationError, CounterexampleError
from abx.records import CheckRecord, CheckReport, RationalStr, Relation

__all__ = (
    "RunSummary",
    "run_suite",
    "check",
    "summary_line",
    "records_to_csv",
    "render_summary",
)

logger = logging.getLogger("abx.commands")

CSV_FIELDS = (
    "instance_id",
    "theorem",
    "relation",
    "lhs",
    "rhs",
    "slack",
    "equality",
    "asserted",
    "holds",
    "passed",
    "witness",
)


class RunSummary(BaseModel):
    suite: str
    n: int
    count: int | str
    seed: int
    j: int | None = None
    instances: int
    records: list[CheckRecord] = Field(default_factory=list)
    failures: int = 0
    # Минимальный запас по утверждаемым неравенствам
    min_slack: RationalStr | None = None
    # Флаг равенства → экземпляры, на которых оно достигнуто
    equality_cases: dict[str, list[str]] = Field(default_factory=dict)
    # Экземпляры, где случай равенства не совпал с предсказанным
    equality_mismatches: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _run_instance(suite_name: str, instance: Instance, j: int | None) -> list[CheckReport]:
    """Точка входа рабочего процесса: только данные на входе и выходе"""
    return get_suite(suite_name).run(instance, j)


def _collect(reports: list[CheckReport], summary: RunSummary) -> None:
    for report in reports:
        summary.records += report.records
        for name, value in report.flags.items():
            if name.endswith("equality") and value:
                summary.equality_cases.setdefault(name, []).append(report.instance_id)
            elif name.endswith("matches") and not value:
                summary.equality_mismatches.append(f"{report.instance_id}:{name}")


def run_suite(config: SuiteConfig, threads: int | None = None) -> RunSummary:
    """Сгенерировать корпус, проверить каждый экземпляр и свести итог

    Пример:

        run_suite(SuiteConfig(suite="godbersen", n=3, count=50)).equality_cases
        >>> {"upper_equality": ["antiblocking-n3-0000"], "lower_equality": [...]}
    """
    suite = get_suite(config.suite)
    if config.n > suite.max_n:
        raise ConfigurationError(
            f"Набор {suite.name} ограничен n ≤ {suite.max_n}, получено {config.n}."
        )
    if config.j is not None and config.j > config.n:
        raise ConfigurationError(f"j = {config.j} больше n = {config.n}.")
    corpus = generate_corpus(suite.kind, config.n, config.count, config.seed, suite.pairs)
    threads = threads or THREADS() or 1
    logger.info(
        "Набор %s: n=%d, экземпляров %d, процессов %d",
        suite.name,
        config.n,
        len(corpus),
        threads,
    )

    results: dict[str, list[CheckReport]] = {}
    progress = tqdm(total=len(corpus), desc=suite.name, unit="inst", disable=None)
    if threads == 1:
        for instance in corpus:
            results[instance.instance_id] = _run_instance(suite.name, instance, config.j)
            progress.update()
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = {
                instance.instance_id: pool.submit(_run_instance, suite.name, instance, config.j)
                for instance in corpus
            }
            for instance_id, future in futures.items():
                results[instance_id] = future.result()
                progress.update()
    progress.close()

    summary = RunSummary(
        suite=suite.name,
        n=config.n,
        count=config.count,
        seed=config.seed,
        j=config.j,
        instances=len(corpus),
    )
    for instance_id in sorted(results):
        _collect(results[instance_id], summary)

    failed = [r for r in summary.records if not r.passed]
    for record in failed:
        logger.warning(
            "Контрпример %s на %s: lhs=%s rhs=%s",
            record.theorem,
            record.instance_id,
            format_rational(record.lhs),
            format_rational(record.rhs),
        )
    for mismatch in summary.equality_mismatches:
        logger.warning("Случай равенства не совпал с предсказанным: %s", mismatch)
    summary.failures = len(failed) + len(summary.equality_mismatches)
    slacks = [
        r.slack for r in summary.records if r.asserted and r.relation == Relation.GE
    ]
    summary.min_slack = min(slacks) if slacks else None
    return summary


def summary_line(summary: RunSummary) -> str:
    min_slack = "-" if summary.min_slack is None else format_rational(summary.min_slack)
    cases = "; ".join(
        f"{name}: {', '.join(ids)}" for name, ids in sorted(summary.equality_cases.items())
    )
    return (
        f"{summary.suite} n={summary.n}: экземпляров {summary.instances}, "
        f"записей {len(summary.records)}, провалов {summary.failures}, "
        f"min slack {min_slack}, равенства [{cases}]"
    )


def records_to_csv(records: list[CheckRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for record in records:
        row = record.model_dump(mode="json")
        row["passed"] = record.passed
        # свидетель пишется только у проваленных записей, компактным JSON
        row["witness"] = (
            json.dumps(row["witness"], separators=(",", ":"), sort_keys=True, ensure_ascii=False)
            if not record.passed and row["witness"] is not None
            else ""
        )
        writer.writerow({name: row[name] for name in CSV_FIELDS})
    return buffer.getvalue()


def render_summary(summary: RunSummary, fmt: OutputFormat = OutputFormat.JSON) -> str:
    if OutputFormat(fmt) is OutputFormat.CSV:
        return records_to_csv(summary.records)
    return json.dumps(summary.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"


def check(config: SuiteConfig, threads: int | None = None) -> RunSummary:
    """run_suite с выводом отчёта в файл или stdout; провал поднимает CounterexampleError"""
    summary = run_suite(config, threads)
    text = render_summary(summary, config.format)
    if config.output is None:
        sys.stdout.write(text)
    else:
        try:
            Path(config.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise ConfigurationError(f"Не удалось записать {config.output}: {exc}")
    line = summary_line(summary)
    logger.info(line)
    if config.output is not None:
        print(line)
    if not summary.passed:
        raise CounterexampleError(
            [r for r in summary.records if not r.passed],
            f"{summary.suite}: провалов {summary.failures}.",
        )
    return summary
