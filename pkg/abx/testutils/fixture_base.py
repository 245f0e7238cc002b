"""Общие фикстуры: стандартные тела, конусы, ЧУМ и тестовый клиент сервиса"""

from typing import Generator

import pytest
from fastapi.testclient import TestClient

from abx.antiblocking import AntiBlockingBody, pentagon, standard_simplex, unit_cube
from abx.coneab import PolyhedralCone, chain_cone, orthant_cone
from abx.posets import Poset, antichain, chain

__all__ = (
    "simplex2",
    "simplex3",
    "cube2",
    "cube3",
    "pentagon_body",
    "orthant2",
    "orthant3",
    "chain_cone2",
    "chain3",
    "antichain3",
    "client",
)


@pytest.fixture(scope="session")
def simplex2() -> AntiBlockingBody:
    return standard_simplex(2)


@pytest.fixture(scope="session")
def simplex3() -> AntiBlockingBody:
    return standard_simplex(3)


@pytest.fixture(scope="session")
def cube2() -> AntiBlockingBody:
    return unit_cube(2)


@pytest.fixture(scope="session")
def cube3() -> AntiBlockingBody:
    return unit_cube(3)


@pytest.fixture(scope="session")
def pentagon_body() -> AntiBlockingBody:
    """{(1,1), (3/2,1/2)}↓ площади 11/8"""
    return pentagon()


@pytest.fixture(scope="session")
def orthant2() -> PolyhedralCone:
    return orthant_cone(2)


@pytest.fixture(scope="session")
def orthant3() -> PolyhedralCone:
    return orthant_cone(3)


@pytest.fixture(scope="session")
def chain_cone2() -> PolyhedralCone:
    """cone{(1,0), (1,1)}"""
    return chain_cone(2)


@pytest.fixture(scope="session")
def chain3() -> Poset:
    return chain(3)


@pytest.fixture(scope="session")
def antichain3() -> Poset:
    return antichain(3)


@pytest.fixture(scope="session")
def client() -> Generator[TestClient, None, None]:
    """Клиент сервиса без режима отладки

    Пример:

    def test_suites(client: TestClient):
        response = client.get("/suites")
    """
    from abx.pattern.service import create_app

    with TestClient(create_app(debug=False)) as test_client:
        yield test_client
