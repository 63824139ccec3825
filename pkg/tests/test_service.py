from fastapi.testclient import TestClient

from gigraph.service import app

client = TestClient(app)


def test_index_lists_endpoints():
    resp = client.get("/")
    assert resp.status_code == 200
    assert "/classify" in resp.json()["endpoints"]


def test_canon_endpoint():
    resp = client.post("/canon", json={"n": 12, "steps": [2, 3, 5]})
    assert resp.status_code == 200
    payload = resp.json()
    assert payload["canonical"] == [1, 2, 3]
    assert payload["witness_unit"] == 5


def test_classify_endpoint():
    resp = client.post("/classify", json={"n": 5, "steps": [1, 2]})
    assert resp.status_code == 200
    payload = resp.json()
    assert payload["cayley"] == "no"
    assert payload["order"] == 120


def test_classify_with_oracle():
    resp = client.post("/classify", json={"n": 7, "steps": [1, 2, 3], "oracle": True})
    payload = resp.json()
    assert payload["oracle"]["order"] == 42
    assert payload["oracle"]["vertex_orbits"] == 1
    assert payload["oracle"]["edge_orbits"] == 2
    assert payload["oracle"]["regular_subgroup_found"] is True
    assert payload["verified"] is True


def test_build_endpoint_json_and_dot():
    resp = client.post("/build", json={"n": 5, "steps": [1, 2]})
    assert resp.status_code == 200
    assert len(resp.json()["edges"]) == 15
    resp = client.post("/build", json={"n": 5, "steps": [1, 2], "format": "dot"})
    assert resp.status_code == 200
    assert resp.text.startswith('graph "GI(5;1,2)"')


def test_aut_endpoint_with_verify():
    resp = client.post("/aut", json={"n": 4, "steps": [1, 1], "verify": True})
    payload = resp.json()
    assert payload["order"] == 48
    assert payload["verified"] is True


def test_census_endpoint():
    resp = client.post("/census", json={"n_lo": 5, "n_hi": 5, "t": 2})
    payload = resp.json()
    assert [row["order"] for row in payload["rows"]] == [20, 120]
    resp = client.post("/census", json={"n_lo": 5, "n_hi": 5, "t": 2,
                                        "format": "csv"})
    assert resp.headers["content-type"].startswith("text/csv")


def test_layout_endpoint_stats_and_svg():
    resp = client.post("/layout", json={"n": 7, "steps": [1, 2, 3],
                                        "check_unit": True})
    assert resp.json()["unit_distance"] is True
    resp = client.post("/layout", json={"n": 7, "steps": [1, 2, 3], "svg": True})
    assert resp.headers["content-type"].startswith("image/svg+xml")
    assert resp.text.count("<circle") == 21


def test_oracle_endpoints():
    resp = client.post("/oracle/girth", json={"n": 7, "steps": [1, 2, 3]})
    assert resp.json() == {"girth": 3, "has_4_cycle": False}
    resp = client.post("/oracle/iso", json={"n": 12, "steps_a": [2, 3, 5],
                                            "steps_b": [1, 2, 3]})
    assert resp.json()["isomorphic"] is True
    resp = client.post("/oracle/cayley", json={"n": 5, "steps": [1, 2]})
    assert resp.json()["regular_subgroup_found"] is False
    resp = client.post("/oracle/aut", json={"n": 3, "steps": [1, 1, 1]})
    assert resp.json()["order"] == 72


def test_domain_error_maps_to_400():
    resp = client.post("/classify", json={"n": 6, "steps": [3]})
    assert resp.status_code == 400
    assert resp.json()["kind"] == "BadStep"


def test_validation_error_maps_to_422():
    resp = client.post("/classify", json={"n": 6})
    assert resp.status_code == 422


def test_cap_maps_to_409(monkeypatch):
    monkeypatch.setenv("GIGRAPH_MAX_VERTICES", "5")
    resp = client.post("/oracle/aut", json={"n": 5, "steps": [1, 2]})
    assert resp.status_code == 409
    assert resp.json()["kind"] == "TooLarge"
