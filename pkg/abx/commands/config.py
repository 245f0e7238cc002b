"""Конфигурация запусков CLI и сервиса"""

from enum import Enum
from pathlib import Path
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

__all__ = ("CorpusKind", "OutputFormat", "Count", "GenConfig", "SuiteConfig")


class CorpusKind(str, Enum):
    ANTIBLOCKING = "antiblocking"
    LOCALLY_AB = "locally_ab"
    CONE = "cone"
    POSET = "poset"
    PERMUTATION = "permutation"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


# Число случайных экземпляров или полный перебор
Count = Annotated[int, Field(ge=1)] | Literal["all"]

Seed = Annotated[int, Field(ge=0, lt=2**64)]


class GenConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: CorpusKind
    n: Annotated[int, Field(ge=1)]
    count: Count = 10
    seed: Seed = 0
    output: Path | None = None

    @field_validator("count", mode="before")
    @classmethod
    def parse_count(cls, value):
        return _parse_count(value)


class SuiteConfig(BaseModel):
    """Параметры одной проверки

    Пример:

        SuiteConfig(suite="godbersen", n=3, count=50, seed=1)
    """

    model_config = ConfigDict(frozen=True)

    suite: str
    n: Annotated[int, Field(ge=1)]
    count: Count = 10
    seed: Seed = 0
    # Для смешанных неравенств: фиксированное j, иначе все 0 ≤ j ≤ n
    j: Annotated[int, Field(ge=0)] | None = None
    output: Path | None = None
    format: OutputFormat = OutputFormat.JSON

    @field_validator("count", mode="before")
    @classmethod
    def parse_count(cls, value):
        return _parse_count(value)


def _parse_count(value):
    """Из CLI count приходит строкой: "all" или число"""
    if isinstance(value, str) and value != "all":
        try:
            return int(value)
        except ValueError:
            raise ValueError(f"count должно быть положительным числом или 'all': {value!r}")
    return value
