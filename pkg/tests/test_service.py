import json
from fractions import Fraction

import pytest
from fastapi.testclient import TestClient

from sislne.service import api
from sislne.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def doc(name, fixtures_dir):
    return json.loads((fixtures_dir / f"{name}.json").read_text())


def test_health(client):
    assert client.get("/health").json()["status"] == "ok"


def test_check_example(client, fixtures_dir):
    r = client.post("/check", json=doc("ex42", fixtures_dir))
    assert r.status_code == 200
    body = r.json()
    assert body["lne"] is True and body["r"] == 5 and body["N0"] == 2
    assert sum(p["degree"] for p in body["points"]) == 5
    assert all(p["fd1NonZero"] for p in body["points"])


def test_check_not_superisolated(client, fixtures_dir):
    body = client.post("/check", json=doc("not-superisolated", fixtures_dir)).json()
    assert body["superisolated"] is False and body["witness"] is not None


def test_bad_polynomial_is_input_error(client):
    r = client.post("/check", json={"fd": "x^2 +", "fd1": "z^3"})
    assert r.status_code == 422 and r.json()["code"] == api.EXIT_INPUT


def test_unknown_field_rejected(client):
    r = client.post("/check", json={"fd": "x*y", "fd1": "z^3", "colour": 1})
    assert r.status_code == 422


def test_graphs_T_and_G0(client, fixtures_dir):
    r = client.post("/graphs", json={"document": doc("ex41", fixtures_dir), "which": "G0"})
    assert r.status_code == 200
    g = json.loads(r.json()["content"])
    assert {v["kind"] for v in g["vertices"]} == {"LNode", "PNode"}
    r = client.post("/graphs", json={"document": doc("ex41", fixtures_dir), "format": "dot"})
    assert r.json()["content"].startswith("graph T")


def test_graphs_error_codes(client, fixtures_dir):
    r = client.post("/graphs", json={"document": doc("cusp", fixtures_dir)})
    assert r.status_code == 409 and r.json()["code"] == api.EXIT_NOT_LNE
    r = client.post("/graphs", json={"document": doc("ex41-expanded", fixtures_dir), "which": "G0"})
    assert r.json()["code"] == api.EXIT_NO_FACTORS


def test_claim2_endpoint(client):
    body = client.post("/claim2", json={"k": 3, "trials": 5}).json()
    assert body["passed"] and body["eta"] == "-3"
    assert client.post("/claim2", json={"k": 1}).status_code == 422


def test_contact_endpoint(client, fixtures_dir):
    body = client.post("/contact", json={"document": doc("ex41", fixtures_dir)}).json()
    assert body["passed"] and body["innerRate"] == "5/4" and body["target"] == "5/4"


def test_contact_advisory_code(client, fixtures_dir):
    req = {"document": doc("ex42", fixtures_dir), "epsGrid": {"lo": 1e-110, "hi": 1e-100, "n": 2}}
    r = client.post("/contact", json=req)
    assert r.json()["code"] == api.EXIT_ADVISORY


def test_contact_bad_point(client, fixtures_dir):
    r = client.post("/contact", json={"document": doc("ex41", fixtures_dir), "point": 9})
    assert r.json()["code"] == api.EXIT_INPUT


def test_parse_mu():
    assert api.parse_mu("1/2") == Fraction(1, 2)
    assert api.parse_mu("1+0.5i") == complex(1, 0.5)
    with pytest.raises(api.ServiceError):
        api.parse_mu("banana")
