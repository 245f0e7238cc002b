"""
Точка входа `abx`.

    abx gen antiblocking --n 3 --count 20 --seed 7
    abx check --suite godbersen --n 3 --count 50 [--j J] [--format json|csv] [--out PATH]
    abx suites
    abx serve --host 127.0.0.1 --port 8000

Коды завершения: 0 все проверки прошли, 2 найден контрпример, 1 прочие ошибки.
"""

import argparse
import json
import logging
import os
import sys
from typing import Sequence

from pydantic import ValidationError

from abx.appstate import DEBUG, THREADS
from abx.commands.config import CorpusKind, GenConfig, OutputFormat, SuiteConfig
from abx.commands.corpus import write_corpus
from abx.commands.runner import check
from abx.commands.suites import SUITES, registry_json
from abx.exception import AbxError, ConfigurationError, error_payload

__all__ = ("build_parser", "main")

logger = logging.getLogger("abx.commands")


class ArgumentParser(argparse.ArgumentParser):
    """Ошибка разбора аргументов завершает процесс с кодом 1, а не 2"""

    def error(self, message: str):
        raise ConfigurationError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(
        prog="abx",
        description="Точная проверка неравенств для anti-blocking многогранников",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Логировать на уровне DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Сгенерировать корпус экземпляров")
    gen.add_argument("kind", choices=[k.value for k in CorpusKind])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--count", default="10")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", dest="output", default=None)

    run = sub.add_parser("check", help="Прогнать проверочный набор")
    run.add_argument("--suite", required=True, choices=list(SUITES))
    run.add_argument("--n", type=int, required=True)
    run.add_argument("--count", default="10")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--j", type=int, default=None)
    run.add_argument("--format", default=OutputFormat.JSON.value, choices=[f.value for f in OutputFormat])
    run.add_argument("--out", dest="output", default=None)
    run.add_argument("--threads", type=int, default=None, help="По умолчанию ABX_THREADS")

    sub.add_parser("suites", help="Показать реестр наборов")

    serve = sub.add_parser("serve", help="Запустить HTTP сервис")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _config(model, args: argparse.Namespace, fields: Sequence[str]):
    try:
        return model(**{name: getattr(args, name) for name in fields})
    except ValidationError as exc:
        raise ConfigurationError(f"Некорректные параметры: {exc.errors(include_url=False)}")


def _serve(host: str, port: int) -> None:
    import uvicorn

    from abx.pattern.service import create_app

    uvicorn.run(create_app(debug=DEBUG()), host=host, port=port)


def run(args: argparse.Namespace) -> int:
    if args.command == "gen":
        config = _config(GenConfig, args, ("kind", "n", "count", "seed", "output"))
        corpus, text = write_corpus(config)
        if config.output is None:
            sys.stdout.write(text)
        else:
            logger.info("Записано экземпляров: %d в %s", len(corpus), config.output)
        return 0
    if args.command == "check":
        config = _config(
            SuiteConfig, args, ("suite", "n", "count", "seed", "j", "output", "format")
        )
        check(config, args.threads)
        return 0
    if args.command == "suites":
        sys.stdout.write(json.dumps(registry_json(), indent=2, ensure_ascii=False) + "\n")
        return 0
    _serve(args.host, args.port)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except ConfigurationError as exc:
        sys.stderr.write(exc.message + "\n")
        return exc.exit_code
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        # Значения окружения читаются один раз за процесс
        DEBUG(os.environ)
        THREADS(os.environ)
        return run(args)
    except Exception as exc:
        payload = error_payload(exc, debug=DEBUG())
        logger.error("%s: %s", payload["error_type"], payload["detail"])
        if "traceback" in payload:
            logger.error(payload["traceback"])
        return exc.exit_code if isinstance(exc, AbxError) else 1


if __name__ == "__main__":
    sys.exit(main())
