from dataclasses import replace

from fastapi.testclient import TestClient

from abx.commands import SUITES
from abx.paginator import DefaultPaginator
from abx.pattern import create_app, read_version
from abx.records import CheckReport, make_record
from abx.testutils import check_response_json


def test_healthcheck(client: TestClient):
    check_response_json(
        client.get("/healthcheck"), 200, {"status": True, "version": "0.1.0"}
    )


def test_suites(client: TestClient):
    response = client.get("/suites")
    assert response.status_code == 200
    suites = response.json()
    assert [s["suite"] for s in suites] == list(SUITES)
    assert suites[0]["theorems"] == ["godbersen-upper", "godbersen-lower"]


def test_check_paginates_records(client: TestClient):
    response = client.post(
        "/check",
        params={"page": 2, "size": 10},
        json={"suite": "godbersen", "n": 2, "count": 1},
    )
    assert response.status_code == 200
    body = response.json()
    assert body["summary"]["instances"] == 3
    assert body["summary"]["failures"] == 0
    assert body["summary"]["records"] == []
    assert "antiblocking-n2-0000" in body["summary"]["equality_cases"]["upper_equality"]
    records = body["records"]
    assert (records["page"], records["size"], records["count"]) == (2, 10, 18)
    assert len(records["items"]) == 8


def test_check_configuration_error(client: TestClient):
    response = client.post("/check", json={"suite": "godbersen", "n": 9})
    check_response_json(
        response,
        400,
        {
            "detail": "Набор godbersen ограничен n ≤ 6, получено 9.",
            "error_type": "ConfigurationError",
            "exit_code": 1,
            "request_path": "/check",
            "query_params": {},
        },
        exclude_list=["error_id", "context"],
    )


def test_check_validation_error(client: TestClient):
    response = client.post("/check", json={"suite": "godbersen", "n": 0})
    assert response.status_code == 422


def test_check_reports_failures(client: TestClient, monkeypatch):
    def failing(instance, j):
        record = make_record(instance.instance_id, "always-fails", 0, 1)
        return [CheckReport(instance_id=instance.instance_id, records=[record])]

    monkeypatch.setitem(SUITES, "godbersen", replace(SUITES["godbersen"], run=failing))
    response = client.post("/check", json={"suite": "godbersen", "n": 2, "count": 1})
    assert response.status_code == 200
    body = response.json()
    assert body["summary"]["failures"] == 3
    assert body["records"]["items"][0]["witness"] == {"instance_id": "antiblocking-n2-0000"}


def test_debug_mode():
    with TestClient(create_app(debug=True)) as client:
        response = client.get("/healthcheck")
        assert "X-Process-Time" in response.headers
        response = client.post("/check", json={"suite": "unknown", "n": 2})
        assert response.status_code == 400
        assert "Traceback" in response.json()["traceback"]


def test_read_version(tmp_path):
    assert read_version(tmp_path) == "0.0.0"
    (tmp_path / "version.toml").write_text('version="2.3.4"\n', encoding="utf-8")
    assert read_version(tmp_path) == "2.3.4"


def test_default_paginator():
    assert DefaultPaginator.json(2, 2, [1, 2, 3]) == {
        "page": 2,
        "size": 2,
        "count": 3,
        "items": [3],
    }
    assert DefaultPaginator.json(3, 2, [1, 2, 3])["items"] == []


def test_check_records_page_matches_schema(client: TestClient):
    response = client.post(
        "/check", params={"page": 1, "size": 5}, json={"suite": "godbersen", "n": 2, "count": 1}
    )
    assert response.status_code == 200
    page = DefaultPaginator.Schema.model_validate(response.json()["records"])
    assert (page.page, page.size, page.count) == (1, 5, 18)
    assert len(page.items) == 5
