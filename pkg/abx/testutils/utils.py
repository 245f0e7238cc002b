from typing import Any, Iterable, Optional, Sequence

from httpx import Response

from abx.exactgeom import Polytope, canonical_hull, make_point

__all__ = (
    "BasePytest",
    "rm_key_from_deep_dict",
    "check_response_json",
    "assert_same_polytope",
    "points",
)


def rm_key_from_deep_dict(data: dict | list, keys: list[str]):
    """Удалить ключи из dict или из списка словарей рекурсивно.

    Пример:

    rm_key_from_deep_dict({"error_id": "...", "detail": "..."}, ["error_id"])
    >>> {"detail": "..."}
    """
    if isinstance(data, dict):
        for key in keys:
            data.pop(key, None)
        for value in data.values():
            rm_key_from_deep_dict(value, keys)
    elif isinstance(data, list):
        for item in data:
            rm_key_from_deep_dict(item, keys)
    return data


def check_response_json(
    response: Response,
    exp_status_code: int,
    exp_json: Any,
    exclude_list: Optional[list[str]] = None,
) -> bool:
    """Проверка json API ответа

    Пример:

    def test_healthcheck(client: TestClient):
        response = client.get("/healthcheck")
        check_response_json(response, 200, {...})
    """
    assert response.status_code == exp_status_code
    response_json = response.json()
    if exclude_list:
        rm_key_from_deep_dict(response_json, exclude_list)
    assert response_json == exp_json
    return True


def points(*items: Sequence) -> tuple:
    """Отсортированные точные точки: points((0, 0), ("1/2", 1))"""
    return tuple(sorted(make_point(p) for p in items))


def assert_same_polytope(P: Polytope | Any, expected: Iterable[Sequence]) -> bool:
    """Сравнить вершины многогранника (или тела с полем body) с ожидаемыми точками

    Пример:

    assert_same_polytope(pentagon(), [(0, 0), (1, 0), ...])
    """
    body = getattr(P, "body", P)
    expected_hull = canonical_hull(expected)
    assert body.dim == expected_hull.dim
    assert body.vertices == expected_hull.vertices, (
        f"{body.vertices} != {expected_hull.vertices}"
    )
    return True


class BasePytest:
    """Базовый класс для тестов с использованием pytest

    Наследуйте этот класс и называйте дочерний класс в формате:

    ```python
    class TestИмяКласса(BasePytest):

        def setUp(self):
            ...

        def test_метод_1(self):
            ...
    ```
    """

    def setup_method(self, method=None):
        """Вызывается перед каждым тестовым методом и вызывает setUp()"""
        self.setUp()

    def setUp(self):
        """Настройка перед каждым тестом"""

    def teardown_method(self, method=None):
        self.tearDown()

    def tearDown(self):
        """Очистка после каждого теста"""

    @classmethod
    def setup_class(cls):
        cls.setUpClass()

    @classmethod
    def setUpClass(cls):
        """Настройка перед всеми тестами класса"""

    @classmethod
    def teardown_class(cls):
        cls.tearDownClass()

    @classmethod
    def tearDownClass(cls):
        """Очистка после всех тестов класса"""
