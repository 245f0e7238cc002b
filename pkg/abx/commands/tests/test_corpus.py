import json

import pytest

from abx.antiblocking import AntiBlockingBody, LocallyAntiBlockingBody
from abx.commands import (
    CorpusKind,
    GenConfig,
    corpus_to_json,
    generate_corpus,
    instance_to_json,
    write_corpus,
)
from abx.coneab import CABBody, PolyhedralCone, chain_cone, orthant_cone
from abx.exception import ConfigurationError
from abx.posets import Permutation, Poset


def test_antiblocking_corpus_size():
    corpus = generate_corpus(CorpusKind.ANTIBLOCKING, 3, 20, seed=7)
    assert len(corpus) == 22
    assert [x.label for x in corpus[:3]] == ["simplex", "cube", "random"]
    assert corpus[0].instance_id == "antiblocking-n3-0000"
    assert corpus[-1].instance_id == "antiblocking-n3-0021"
    assert all(isinstance(x.payload[0], AntiBlockingBody) for x in corpus)


def test_corpus_is_reproducible():
    config = GenConfig(kind="antiblocking", n=3, count=20, seed=7)
    first = corpus_to_json(config, generate_corpus(config.kind, 3, 20, 7))
    second = corpus_to_json(config, generate_corpus(config.kind, 3, 20, 7))
    assert first == second
    other = corpus_to_json(config, generate_corpus(config.kind, 3, 20, 8))
    assert other != first


def test_random_instance_does_not_depend_on_count():
    short = generate_corpus(CorpusKind.POSET, 4, 2, seed=3)
    long = generate_corpus(CorpusKind.POSET, 4, 10, seed=3)
    assert [x.payload for x in short] == [x.payload for x in long[:4]]


@pytest.mark.parametrize("pairs, expected", [(False, 24), (True, 576)])
def test_all_permutations(pairs, expected):
    corpus = generate_corpus(CorpusKind.PERMUTATION, 4, "all", pairs=pairs)
    assert len(corpus) == expected
    assert all(x.label == "all" for x in corpus)
    assert corpus[0].payload[0] == Permutation.identity(4)


@pytest.mark.parametrize(
    "kind, n, count",
    [
        (CorpusKind.ANTIBLOCKING, 3, "all"),
        (CorpusKind.PERMUTATION, 9, "all"),
        (CorpusKind.POSET, 3, 0),
    ],
)
def test_invalid_corpus(kind, n, count):
    with pytest.raises(ConfigurationError):
        generate_corpus(kind, n, count)


def test_pairs():
    corpus = generate_corpus(CorpusKind.POSET, 3, 2, seed=1, pairs=True)
    assert [x.label for x in corpus] == ["chain", "antichain", "random", "random"]
    assert all(len(x.payload) == 2 for x in corpus)
    assert all(isinstance(p, Poset) for x in corpus for p in x.payload)
    P, Q = corpus[0].payload
    assert P == Q


def test_cone_corpus():
    corpus = generate_corpus(CorpusKind.CONE, 2, 2, seed=0)
    assert [x.label for x in corpus] == ["simplex", "cube", "random", "random"]
    assert [x.payload[0] for x in corpus] == [
        orthant_cone(2),
        orthant_cone(2),
        orthant_cone(2),
        chain_cone(2),
    ]
    for x in corpus:
        C, K, L = x.payload
        assert isinstance(C, PolyhedralCone)
        assert isinstance(K, CABBody) and K.cone == C
        assert L.cone == C.dual()
        assert K.proper and L.proper


def test_locally_ab_corpus():
    corpus = generate_corpus(CorpusKind.LOCALLY_AB, 2, 2, seed=0)
    assert [x.label for x in corpus[:2]] == ["cube", "cross-polytope"]
    assert all(isinstance(x.payload[0], LocallyAntiBlockingBody) for x in corpus)
    assert corpus[0].payload[0].volume == 4
    assert corpus[1].payload[0].volume == 2


def test_instance_json():
    (chain_instance, _, _) = generate_corpus(CorpusKind.POSET, 3, 1)
    data = instance_to_json(chain_instance)
    assert data["instance_id"] == "poset-n3-0000"
    assert data["label"] == "chain"
    assert data["data"] == {"n": 3, "relations": [[1, 2], [2, 3]]}

    cone = instance_to_json(generate_corpus(CorpusKind.CONE, 2, 1)[0])
    assert set(cone["data"]) == {"cone", "K", "L"}
    assert cone["data"]["L"]["cone"] == "C∨"


def test_write_corpus(tmp_path):
    path = tmp_path / "corpus.json"
    corpus, text = write_corpus(GenConfig(kind="permutation", n=3, count=2, output=path))
    assert path.read_text(encoding="utf-8") == text
    document = json.loads(text)
    assert document["kind"] == "permutation"
    assert len(document["instances"]) == len(corpus) == 4
    assert document["instances"][0]["data"] == {"one_line": [1, 2, 3]}


def test_write_corpus_to_missing_directory(tmp_path):
    config = GenConfig(kind="poset", n=2, count=1, output=tmp_path / "missing" / "c.json")
    with pytest.raises(ConfigurationError):
        write_corpus(config)
