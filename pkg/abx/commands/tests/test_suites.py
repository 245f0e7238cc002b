import pytest

from abx.commands import SUITES, generate_corpus, get_suite, registry_json
from abx.exception import ConfigurationError


def test_registry():
    assert len(SUITES) == 15
    entries = registry_json()
    assert [e["suite"] for e in entries] == list(SUITES)
    godbersen = entries[0]
    assert godbersen == {
        "suite": "godbersen",
        "kind": "antiblocking",
        "pairs": False,
        "max_n": 6,
        "theorems": ["godbersen-upper", "godbersen-lower"],
        "description": SUITES["godbersen"].description,
    }


def test_unknown_suite():
    with pytest.raises(ConfigurationError):
        get_suite("mahler")


@pytest.mark.parametrize("name", list(SUITES))
def test_boundary_instances_pass(name):
    """Граничные экземпляры проходят, а теги записей объявлены в реестре"""
    suite = get_suite(name)
    corpus = generate_corpus(suite.kind, 2, 1, seed=0, pairs=suite.pairs)
    for instance in corpus[:2]:
        reports = suite.run(instance, None)
        assert reports
        for report in reports:
            assert report.instance_id == instance.instance_id
            assert report.passed, [r for r in report.records if not r.passed]
            assert {r.theorem for r in report.records} <= set(suite.theorems)


def test_fixed_j_for_mixed_sidorenko():
    suite = get_suite("mixed-sidorenko")
    (instance, *_) = generate_corpus(suite.kind, 3, 1, pairs=True)
    assert len(suite.run(instance, None)) == 4
    assert len(suite.run(instance, 1)) == 1
    with pytest.raises(ConfigurationError):
        suite.run(instance, 5)
