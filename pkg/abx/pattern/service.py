"""HTTP сервис: реестр наборов и запуск проверок"""

from fastapi import APIRouter, FastAPI, Query
from pydantic import BaseModel

from abx.commands import SuiteConfig, registry_json, run_suite
from abx.commands.runner import RunSummary
from abx.paginator import DefaultPaginator
from abx.pattern.pattern_fastapi import base_pattern

__all__ = ("router", "create_app")

router = APIRouter(tags=["checks"])


class SuiteInfo(BaseModel):
    suite: str
    kind: str
    pairs: bool
    max_n: int
    theorems: list[str]
    description: str


class CheckResponse(BaseModel):
    summary: RunSummary
    records: DefaultPaginator.Schema


@router.get("/suites", summary="Реестр проверочных наборов")
def suites() -> list[SuiteInfo]:
    return registry_json()


@router.post("/check", summary="Прогнать набор и вернуть записи постранично")
def check(
    config: SuiteConfig,
    page: int = Query(1, ge=1),
    size: int = Query(100, ge=1, le=1000),
) -> CheckResponse:
    # Сервис не раздаёт работу пулу процессов и не падает на контрпримере:
    # провалы видны в summary.failures
    summary = run_suite(config, threads=1)
    records = DefaultPaginator.json(page, size, summary.records)
    return {
        "summary": summary.model_copy(update={"records": []}),
        "records": records,
    }


def create_app(debug: bool = False) -> FastAPI:
    app = FastAPI(title="abx")
    base_pattern(app, (router,), debug=debug)
    return app
