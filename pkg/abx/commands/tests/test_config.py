import pytest
from pydantic import ValidationError

from abx.commands import CorpusKind, GenConfig, OutputFormat, SuiteConfig


def test_defaults():
    config = SuiteConfig(suite="godbersen", n=3)
    assert (config.count, config.seed, config.j) == (10, 0, None)
    assert config.format is OutputFormat.JSON
    assert config.output is None


@pytest.mark.parametrize("count, expected", [("5", 5), (7, 7), ("all", "all")])
def test_count_from_cli(count, expected):
    assert SuiteConfig(suite="sidorenko", n=3, count=count).count == expected
    assert GenConfig(kind="permutation", n=3, count=count).count == expected


@pytest.mark.parametrize(
    "fields",
    [
        {"n": 0},
        {"count": "abc"},
        {"count": 0},
        {"seed": -1},
        {"seed": 2**64},
        {"j": -1},
        {"format": "xml"},
    ],
)
def test_invalid_suite_config(fields):
    with pytest.raises(ValidationError):
        SuiteConfig(**{"suite": "godbersen", "n": 3, **fields})


def test_gen_config():
    config = GenConfig(kind="cone", n=2, count="3", seed=5, output="corpus.json")
    assert config.kind is CorpusKind.CONE
    assert str(config.output) == "corpus.json"
    with pytest.raises(ValidationError):
        GenConfig(kind="graph", n=2)
    with pytest.raises(ValidationError):
        config.n = 3
