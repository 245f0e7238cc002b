"""
Записи проверок и отчёты.

Рациональные числа сериализуются строками "p/q", чтобы на всём пути
от ядра до JSON/CSV не было потерь точности.
"""

from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Callable

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    WithJsonSchema,
)

from abx.exactgeom.rational import format_rational, to_rational
from abx.utils import NoInstanceMeta

__all__ = (
    "RationalStr",
    "Relation",
    "CheckRecord",
    "CheckReport",
    "make_record",
    "theorem",
)

RationalStr = Annotated[
    Fraction,
    BeforeValidator(to_rational),
    PlainSerializer(format_rational, return_type=str),
    WithJsonSchema({"type": "string", "examples": ["3/2", "0"]}),
]


class Relation(str, Enum):
    """Как сравниваются lhs и rhs"""

    # неравенство lhs ≥ rhs
    GE = "ge"
    # тождество lhs = rhs
    EQ = "eq"
    # равенство множеств, lhs и rhs это объёмы для справки
    SAME = "same"
    # множество слева содержит множество справа
    CONTAINS = "contains"


class CheckRecord(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    instance_id: str
    theorem: str
    lhs: RationalStr
    rhs: RationalStr
    slack: RationalStr
    equality: bool
    relation: Relation = Relation.GE
    # Ложь для гипотез и справочных величин: такие записи не валят прогон
    asserted: bool = True
    # Итог проверки для отношений same и contains
    holds: bool | None = None
    witness: dict[str, Any] | None = None

    @property
    def passed(self) -> bool:
        if not self.asserted:
            return True
        if self.relation == Relation.GE:
            return self.slack >= 0
        if self.relation == Relation.EQ:
            return self.slack == 0
        return bool(self.holds)


class CheckReport(BaseModel):
    """Отчёт одной операции проверки на одном экземпляре"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    instance_id: str
    records: list[CheckRecord] = Field(default_factory=list)
    flags: dict[str, bool] = Field(default_factory=dict)
    values: dict[str, RationalStr] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def by_theorem(self, tag: str) -> list[CheckRecord]:
        return [r for r in self.records if r.theorem == tag]

    def record(self, tag: str) -> CheckRecord:
        """Единственная запись с данным тегом"""
        found = self.by_theorem(tag)
        if len(found) != 1:
            raise KeyError(f"Ожидалась одна запись {tag!r}, найдено {len(found)}.")
        return found[0]


def make_record(
    instance_id: str,
    tag: str,
    lhs,
    rhs,
    *,
    relation: Relation = Relation.GE,
    asserted: bool = True,
    equality: bool | None = None,
    holds: bool | None = None,
    witness: dict | Callable[[], dict] | None = None,
) -> CheckRecord:
    """Собрать запись; свидетель вычисляется только для проваленной проверки"""
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    slack = lhs - rhs
    record = CheckRecord(
        instance_id=instance_id,
        theorem=tag,
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        equality=(slack == 0) if equality is None else equality,
        relation=relation,
        asserted=asserted,
        holds=holds,
    )
    if record.passed:
        return record
    payload = witness() if callable(witness) else witness
    return record.model_copy(
        update={"witness": payload or {"instance_id": instance_id}}
    )


class theorem(metaclass=NoInstanceMeta):
    """Теги проверяемых утверждений (значение поля CheckRecord.theorem)"""

    # kernel
    ROGERS_SHEPHARD_DIFFERENCE = "rogers-shephard-difference"
    ROGERS_SHEPHARD_SECTION = "rogers-shephard-section"
    # antiblocking
    GODBERSEN_UPPER = "godbersen-upper"
    GODBERSEN_LOWER = "godbersen-lower"
    DIFFERENCE_DISSECTION = "difference-dissection"
    HULL_DISSECTION = "hull-dissection"
    MIXED_VOLUME_FORMULA = "mixed-volume-formula"
    SAINT_RAYMOND = "saint-raymond"
    MIXED_SAINT_RAYMOND = "mixed-saint-raymond"
    MIXED_SAINT_RAYMOND_MULTI = "mixed-saint-raymond-multi"
    LOCAL_POLAR = "locally-ab-polar"
    LOCAL_MAHLER = "mahler-locally-ab"
    REVERSE_KLEITMAN_MIXED = "reverse-kleitman-mixed"
    REVERSE_KLEITMAN = "reverse-kleitman"
    ORDER_CONVEX_KLEITMAN = "order-convex-kleitman"
    ORDER_CONVEX_DIFFERENCE = "order-convex-difference"
    SANDWICH_INNER = "sandwich-inner"
    SANDWICH_OUTER = "sandwich-outer"
    # cbodies
    CAYLEY_SLICE = "cbody-slice"
    CAYLEY_VOLUME = "cbody-volume"
    CAYLEY_POLAR = "cbody-polar"
    CAYLEY_MAHLER_LAMBDA = "cbody-mahler-lambda"
    CAYLEY_MAHLER_BOUND = "cbody-mahler-bound"
    CAYLEY_MAHLER_ASYMPTOTIC = "cbody-mahler-asymptotic"
    CAYLEY_PRODUCT_IDENTITY = "cbody-product-identity"
    CAYLEY_DISSECTION = "cayley-dissection"
    JOIN_PRODUCT_BINOMIAL = "join-product-binomial"
    JOIN_PRODUCT_CENTRAL = "join-product-central"
    JOIN_PRODUCT_MAHLER = "join-product-mahler"
    SHADOW_INVARIANCE = "shadow-invariance"
    STEINER_VOLUME = "steiner-volume"
    STEINER_MONOTONICITY = "steiner-monotonicity"
    ITERATED_SYMMETRAL = "iterated-symmetral"
    # coneab
    CONE_DISSECTION = "cone-dissection"
    CONE_MIXED_VOLUME = "cone-mixed-volume"
    CONE_DIFFERENCE_HAT = "cone-difference-hat"
    CONE_DUALITY = "cone-duality"
    NEAREST_POINT = "nearest-point-certificate"
    SPACE_DISSECTION = "space-dissection"
    POLYTOPE_PROJECTION = "polytope-projection"
    # posets
    CHAIN_VOLUME = "chain-volume"
    STABLE_SET_DUALITY = "stable-set-duality"
    EXTENSIONS_ORACLE = "extensions-oracle"
    SIDORENKO = "sidorenko"
    WEAK_ORDER = "weak-order"
    WEAK_ORDER_EXTENSIONS = "weak-order-extensions"
    MIXED_SIDORENKO = "mixed-sidorenko"
    SPLIT_EXTENSION_COUNT = "split-extension-count"
    EJ_ORACLE = "ej-permutation-oracle"
    EJ_LOG_CONCAVE = "ej-log-concave"
    EJ_PALINDROMIC = "ej-palindromic"
    EJ_LOWER = "ej-lower"
    EJ_UPPER = "ej-upper"
    EJ_ANTICHAIN_FACTOR = "ej-antichain-factor"
    EJ_MIXED_VOLUME = "ej-mixed-volume"
