"""
Воспроизводимые корпуса экземпляров.

Экземпляр с номером index строится из собственного генератора
random.Random(f"{seed}:{kind}:{n}:{index}"), поэтому корпус не зависит
от порядка и параллельности вычислений. Граничные экземпляры (симплекс,
куб, цепь, антицепь, тождественная и обратная перестановки) идут первыми.
"""

import json
import logging
import random
from dataclasses import dataclass
from itertools import permutations, product
from pathlib import Path
from typing import Any

from abx.antiblocking import (
    DecompositionMode,
    LocallyAntiBlockingBody,
    antiblocking_to_json,
    assembled_difference,
    random_antiblocking,
    standard_simplex,
    unit_cube,
)
from abx.commands.config import CorpusKind, GenConfig
from abx.coneab import (
    c_down_closure,
    cab_to_json,
    cone_to_json,
    orthant_cone,
    random_cab,
    standard_cones,
)
from abx.exactgeom import polytope_to_json
from abx.exception import ConfigurationError
from abx.posets import (
    Permutation,
    antichain,
    chain,
    permutation_to_json,
    poset_to_json,
    random_permutation,
    random_poset,
)

__all__ = (
    "Instance",
    "generate_corpus",
    "instance_to_json",
    "corpus_to_json",
    "write_corpus",
)

logger = logging.getLogger("abx.commands")

# Перебор "all" разрешён только там, где он конечен и мал
MAX_ALL_PERMUTATIONS = 8

RANDOM_MAKERS = {
    CorpusKind.ANTIBLOCKING: random_antiblocking,
    CorpusKind.POSET: random_poset,
    CorpusKind.PERMUTATION: random_permutation,
}


@dataclass(frozen=True)
class Instance:
    instance_id: str
    kind: CorpusKind
    # Имя граничного экземпляра или "random"
    label: str
    payload: tuple


def _rng(seed: int, kind: CorpusKind, n: int, index: int, stream: str = "") -> random.Random:
    return random.Random(f"{seed}:{kind.value}:{n}:{index}{stream}")


def _locally_ab(K1, K2, mode: DecompositionMode) -> LocallyAntiBlockingBody:
    return LocallyAntiBlockingBody.from_polytope(assembled_difference(K1, K2, mode))


def _boundary(kind: CorpusKind, n: int, pairs: bool) -> list[tuple[str, tuple]]:
    if kind is CorpusKind.ANTIBLOCKING:
        items = [("simplex", standard_simplex(n)), ("cube", unit_cube(n))]
        return [(name, (K, K) if pairs else (K,)) for name, K in items]
    if kind is CorpusKind.LOCALLY_AB:
        cube, simplex = unit_cube(n), standard_simplex(n)
        return [
            ("cube", (_locally_ab(cube, cube, DecompositionMode.SUM),)),
            ("cross-polytope", (_locally_ab(simplex, simplex, DecompositionMode.HULL),)),
        ]
    if kind is CorpusKind.CONE:
        C = orthant_cone(n)
        simplex = c_down_closure(C, [tuple(int(i == k) for k in range(n)) for i in range(n)])
        cube = c_down_closure(C, [(1,) * n])
        return [("simplex", (C, simplex, simplex)), ("cube", (C, cube, cube))]
    if kind is CorpusKind.POSET:
        items = [("chain", chain(n)), ("antichain", antichain(n))]
        return [(name, (P, P) if pairs else (P,)) for name, P in items]
    items = [("identity", Permutation.identity(n)), ("reversal", Permutation.reverse(n))]
    return [(name, (pi, pi) if pairs else (pi,)) for name, pi in items]


def _random_payload(
    kind: CorpusKind, n: int, seed: int, index: int, pairs: bool
) -> tuple:
    rng = _rng(seed, kind, n, index)
    if kind is CorpusKind.LOCALLY_AB:
        # Чётные номера дают K₁ − K₂, нечётные K₁ ∨ −K₂
        mode = DecompositionMode.SUM if index % 2 == 0 else DecompositionMode.HULL
        return (_locally_ab(random_antiblocking(n, rng), random_antiblocking(n, rng), mode),)
    if kind is CorpusKind.CONE:
        cones = list(standard_cones(n).values())
        C = cones[index % len(cones)]
        return (C, random_cab(C, rng), random_cab(C.dual(), rng))
    make = RANDOM_MAKERS[kind]
    first = make(n, rng)
    if not pairs:
        return (first,)
    return first, make(n, _rng(seed, kind, n, index, ":pair"))


def _all_permutations(n: int, pairs: bool) -> list[tuple[str, tuple]]:
    if n > MAX_ALL_PERMUTATIONS:
        raise ConfigurationError(
            f"Полный перебор перестановок ограничен n ≤ {MAX_ALL_PERMUTATIONS}."
        )
    perms = [Permutation(p) for p in permutations(range(1, n + 1))]
    if pairs:
        return [("all", (pi, sigma)) for pi, sigma in product(perms, perms)]
    return [("all", (pi,)) for pi in perms]


def generate_corpus(
    kind: CorpusKind, n: int, count: int | str, seed: int = 0, pairs: bool = False
) -> list[Instance]:
    """Граничные экземпляры и count случайных

    Пример:

        len(generate_corpus(CorpusKind.ANTIBLOCKING, 3, 20, seed=7))
        >>> 22
    """
    kind = CorpusKind(kind)
    if count == "all":
        if kind is not CorpusKind.PERMUTATION:
            raise ConfigurationError(f"count=all поддерживается только для permutation, не {kind.value}.")
        items = _all_permutations(n, pairs)
    else:
        if not isinstance(count, int) or count < 1:
            raise ConfigurationError(f"count должно быть положительным: {count!r}.")
        items = _boundary(kind, n, pairs)
        offset = len(items)
        items += [
            ("random", _random_payload(kind, n, seed, offset + i, pairs)) for i in range(count)
        ]
    width = max(4, len(str(len(items))))
    logger.debug("Корпус %s n=%d: %d экземпляров", kind.value, n, len(items))
    return [
        Instance(f"{kind.value}-n{n}-{index:0{width}d}", kind, label, payload)
        for index, (label, payload) in enumerate(items)
    ]


def _item_to_json(kind: CorpusKind, item: Any) -> Any:
    if kind is CorpusKind.ANTIBLOCKING:
        return antiblocking_to_json(item)
    if kind is CorpusKind.LOCALLY_AB:
        return polytope_to_json(item.assembled)
    if kind is CorpusKind.POSET:
        return poset_to_json(item)
    return permutation_to_json(item)


def instance_to_json(instance: Instance) -> dict:
    if instance.kind is CorpusKind.CONE:
        C, K, L = instance.payload
        data: Any = {"cone": cone_to_json(C), "K": cab_to_json(K), "L": cab_to_json(L, "C∨")}
    else:
        data = [_item_to_json(instance.kind, item) for item in instance.payload]
        data = data[0] if len(data) == 1 else data
    return {"instance_id": instance.instance_id, "label": instance.label, "data": data}


def corpus_to_json(config: GenConfig, corpus: list[Instance]) -> str:
    """Детерминированный текст: одинаковая конфигурация даёт одинаковые байты"""
    document = {
        "kind": config.kind.value,
        "n": config.n,
        "count": config.count,
        "seed": config.seed,
        "instances": [instance_to_json(x) for x in corpus],
    }
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_corpus(config: GenConfig) -> tuple[list[Instance], str]:
    corpus = generate_corpus(config.kind, config.n, config.count, config.seed)
    text = corpus_to_json(config, corpus)
    if config.output is not None:
        try:
            Path(config.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise ConfigurationError(f"Не удалось записать {config.output}: {exc}")
    return corpus, text

