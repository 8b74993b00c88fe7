import json

import pytest
from fastapi.testclient import TestClient

from main import app
from services import complex_processor
from services.homology import HomologyEngine

API = "/api/v1"


@pytest.fixture
def client() -> TestClient:
    return TestClient(app)


def test_health(client) -> None:
    assert client.get("/health").json() == {"status": "healthy"}
    assert client.get("/").status_code == 200


def test_build(client) -> None:
    response = client.post(f"{API}/build", json={"graph": "sqp", "k": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["facets"] == [[0, 1, 3], [0, 2, 3], [1, 2, 3], [1, 3, 4], [1, 3, 5]]
    assert body["void"] is False


def test_build_cut_variant(client) -> None:
    response = client.post(f"{API}/build", json={"graph": "path:4", "k": 2, "variant": "cut"})
    assert response.status_code == 200
    assert response.json()["facets"] == [[0, 2], [1, 2], [1, 3]]


def test_homology_from_graph_text(client) -> None:
    response = client.post(f"{API}/homology", json={"graph_text": "4 4\n0 1\n1 2\n2 3\n3 0", "k": 2})
    assert response.status_code == 200
    body = response.json()
    assert body["betti"]["0"] == 1
    assert body["dimension"] == 1


def test_morse(client) -> None:
    response = client.post(f"{API}/morse", json={"graph": "prism:3", "k": 2, "schedule": "preset"})
    assert response.status_code == 200
    body = response.json()
    assert body["critical_faces"] == [[1, 3, 4], [2, 3, 5]]
    assert body["morse_inequalities_ok"] is True


def test_check_obstruction(client) -> None:
    response = client.post(f"{API}/check", json={"graph": "cycle:6", "k": 2, "property": "obstruction"})
    assert response.status_code == 200
    body = response.json()
    assert body["holds"] is True
    assert body["detail"]["dimension"] == 2


def test_verify_and_sweep(client) -> None:
    response = client.get(f"{API}/verify/edgeless", params={"ranges": "n=1..3"})
    assert response.status_code == 200
    assert all(case["passed"] for case in response.json()["cases"])

    response = client.get(f"{API}/sweep/squared_cycle", params={"ranges": "k=2,n=5..6"})
    assert response.status_code == 200
    assert [row["match"] for row in response.json()] == [True, True]


def test_tables(client) -> None:
    response = client.get(f"{API}/tables/G2n", params={"kmax": 2, "nmax": 3})
    assert response.status_code == 200
    table = json.loads(response.json()["table"])
    assert table["2"] == {"n=2": "β_0=1", "n=3": "β_2=2"}


@pytest.mark.parametrize(
    "path, payload",
    [
        ("/build", {"graph": "nosuch:3", "k": 2}),
        ("/build", {"k": 2}),
        ("/morse", {"graph": "cycle:5", "k": 2, "schedule": "0,0"}),
    ],
)
def test_invalid_input_is_400(client, path, payload) -> None:
    assert client.post(f"{API}{path}", json=payload).status_code == 400


def test_unknown_suite_is_400(client) -> None:
    assert client.get(f"{API}/verify/nosuch").status_code == 400


def test_schema_validation_is_422(client) -> None:
    assert client.post(f"{API}/build", json={"graph": "sqp", "k": -1}).status_code == 422


def test_cap_is_413(client, monkeypatch) -> None:
    tiny = HomologyEngine(face_cap=2)
    monkeypatch.setattr(complex_processor, "get_homology_engine", lambda: tiny)
    response = client.post(f"{API}/homology", json={"graph": "cycle:6", "k": 2})
    assert response.status_code == 413
