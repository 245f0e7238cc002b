import pytest

from abx.records import theorem
from abx.utils import NoInstanceMeta, singleton


def _threads_reader():
    calls = []

    @singleton
    def THREADS(environ=None) -> int:
        calls.append(environ)
        return int(environ.get("ABX_THREADS", "1"))

    return THREADS, calls


def test_singleton_is_false_until_read():
    THREADS, calls = _threads_reader()
    assert THREADS() is False
    assert calls == []


def test_singleton_reads_once():
    THREADS, calls = _threads_reader()
    assert THREADS({"ABX_THREADS": "4"}) == 4
    assert THREADS({"ABX_THREADS": "8"}) == 4
    assert THREADS() == 4
    assert len(calls) == 1
    assert THREADS.__name__ == "THREADS"


def test_singleton_keeps_falsy_value():
    @singleton
    def DEBUG(environ=None) -> bool:
        return environ.get("ABX_DEBUG") == "1"

    assert DEBUG({}) is False
    assert DEBUG({"ABX_DEBUG": "1"}) is False


def test_theorem_tags_are_a_namespace():
    assert isinstance(theorem, NoInstanceMeta)
    assert theorem.GODBERSEN_UPPER == "godbersen-upper"
    with pytest.raises(TypeError):
        theorem()
