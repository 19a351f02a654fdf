import json

import pytest
from fastapi.testclient import TestClient

from salemlattices.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


MU3_JSON = {
    "entries": [
        {"x": [{"sym": "1", "coef": "1"}], "y": []},
        {"x": [], "y": [{"sym": "1", "coef": "1"}]},
        {"x": [{"sym": "1", "coef": "1"}], "y": [{"sym": "1", "coef": "1"}]},
    ]
}


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_salem_check_yes(client):
    res = client.post(
        "/v1/salem/check", json={"poly": ["1", "0", "-1", "-1", "-1", "0", "1"]}
    )
    body = res.json()
    assert res.status_code == 200
    assert body["status"] == "yes" and body["witness"]["k"] == 3
    data = body["witness"]["salem_data"]
    assert float(data["r"]["re"][0]) > 1


def test_salem_check_no(client):
    res = client.post("/v1/salem/check", json={"poly": ["1", "-2", "1"]})
    body = res.json()
    assert body["status"] == "no" and body["witness"]["reason"] == "f2-rule"


def test_salem_check_schema_error(client):
    res = client.post("/v1/salem/check", json={"poly": "nope"})
    assert res.status_code == 422  # pydantic path-reporting schema error


def test_salem_enum(client):
    res = client.post(
        "/v1/salem/enum", json={"a_min": 3, "a_max": 3, "b_min": 3, "b_max": 3}
    )
    body = res.json()
    assert body["status"] == "yes" and body["witness"]["params"] == [[3, 3]]


def test_salem_equiv(client):
    res = client.post(
        "/v1/salem/equiv",
        json={"poly1": ["1", "-3", "1"], "poly2": ["1", "-7", "1"]},
    )
    body = res.json()
    assert body["status"] == "yes"
    assert (body["witness"]["k1"], body["witness"]["k2"]) == (2, 1)


def test_mu_check_roundtrip(client):
    # synthesized member: one circle pair of the quartic plus offset 2
    key = "1,-3,3,-3,1"
    mu = {
        "entries": [
            [{"sym": f"s1/log_r[{key}]", "coef": "1"},
             {"sym": f"2pi/log_r[{key}]", "coef": "1"}],
            [{"sym": f"2pi/log_r[{key}]", "coef": "2"}],
        ]
    }
    res = client.post(
        "/v1/mu/check-t1", json={"mu": mu, "poly": ["1", "-3", "3", "-3", "1"]}
    )
    body = res.json()
    assert body["status"] == "yes"
    assert body["witness"]["assignment"][0][0] == "pair"
    # membership witnesses hold by the definition of the symbols
    assert body["assumptions"] == []


def test_mu_check_non_member(client):
    mu = {"entries": [[{"sym": "1", "coef": "1"}]]}
    res = client.post(
        "/v1/mu/check-t1", json={"mu": mu, "poly": ["1", "-3", "1"]}
    )
    assert res.json()["status"] == "no"


def test_decide_t1(client):
    mu = {"entries": [[{"sym": "2pi/log_r[1,-3,1]", "coef": "1"}],
                      [{"sym": "2pi/log_r[1,-3,1]", "coef": "2"}]]}
    res = client.post("/v1/decide/t1", json={"mu": mu, "coeff_height": 5})
    body = res.json()
    assert body["status"] == "yes"
    assert body["witness"]["poly"] == ["1", "-3", "1"]
    assert body["bounds_used"]["coeff_height"] == 5


def test_decide_t2_yes_and_no(client):
    res = client.post("/v1/decide/t2", json={"mu": MU3_JSON})
    body = res.json()
    assert body["status"] == "yes"
    assert body["witness"]["mu_coords"] == [[1, 0], [0, 1], [1, 1]]

    bad = {
        "family": "d",
        "symbols": [{"name": "sqrt(2)", "independent": True}],
        "entries": [
            {"x": [{"sym": "1", "coef": "1"}], "y": []},
            {"x": [{"sym": "sqrt(2)", "coef": "1"}], "y": []},
            {"x": [], "y": [{"sym": "1", "coef": "1"}]},
        ],
    }
    res = client.post("/v1/decide/t2", json={"mu": bad})
    body = res.json()
    assert body["status"] == "no"
    assert body["assumptions"]


def test_build_and_verify_roundtrip(client):
    res = client.post(
        "/v1/lattice/build", json={"family": "osc1", "poly": ["1", "-3", "1"], "q": 1}
    )
    lattice = res.json()["witness"]["lattice"]
    res2 = client.post(
        "/v1/lattice/verify", json={"lattice": lattice, "word_length": 3}
    )
    body = res2.json()
    assert body["status"] == "yes"
    assert body["witness"]["closure"]["violations"] == 0
    assert all(c["passed"] for c in body["witness"]["lko"].values())

    spec = dict(MU3_JSON)
    res = client.post("/v1/lattice/build", json={"family": "d", "mu": spec})
    lattice = res.json()["witness"]["lattice"]
    res2 = client.post(
        "/v1/lattice/verify", json={"lattice": lattice, "word_length": 2}
    )
    assert res2.json()["witness"]["closure"]["violations"] == 0


def test_verify_corrupted_lattice_internal_error(client):
    res = client.post(
        "/v1/lattice/build", json={"family": "osc1", "poly": ["1", "-3", "1"], "q": 1}
    )
    lattice = res.json()["witness"]["lattice"]
    lattice["generators"][0]["z"] = "2/3"
    res2 = client.post(
        "/v1/lattice/verify", json={"lattice": lattice, "word_length": 2}
    )
    assert res2.status_code == 500
    assert res2.json()["status"] == "error"
    assert res2.json()["error"]["kind"] == "ClosureViolation"


def test_commensurable_endpoint(client):
    req = {
        "gamma1": {"poly": ["1", "-3", "1"], "q": 1},
        "gamma2": {"poly": ["1", "-3", "3", "-3", "1"], "q": 1},
    }
    res = client.post("/v1/commensurable", json=req)
    body = res.json()
    assert body["status"] == "no"
    req = {
        "gamma1": {"poly": ["1", "-3", "1"], "q": 0},
        "gamma2": {"poly": ["1", "-7", "1"], "q": 0},
    }
    res = client.post("/v1/commensurable", json=req)
    body = res.json()
    assert body["status"] == "yes"
    assert body["witness"]["n1"] == 2 and body["witness"]["n2"] == 1


def test_bch_endpoint(client):
    res = client.post("/v1/bch/check", json={"t": ["1", "0"], "t_dot": ["0", "1"]})
    body = res.json()
    assert body["status"] == "yes" and body["witness"]["equal"]
    res = client.post("/v1/bch/check", json={"grid": 5})
    assert res.json()["witness"]["checks"] == 25


def test_domain_error_is_400(client):
    res = client.post(
        "/v1/lattice/build", json={"family": "osc1", "poly": ["1", "-2", "1"], "q": 1}
    )
    assert res.status_code == 400
    assert res.json()["status"] == "error"


def test_deterministic_bytes(client):
    req = {"poly": ["1", "-3", "3", "-3", "1"]}
    a = client.post("/v1/salem/check", json=req).content
    b = client.post("/v1/salem/check", json=req).content
    assert a == b
