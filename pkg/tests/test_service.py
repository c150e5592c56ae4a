import json
import math

import numpy as np
import pytest
from fastapi.testclient import TestClient

from hyperlap.service import app

client = TestClient(app)


def test_health():
    r = client.get("/health")
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "ok"
    assert body["version"]


def test_entries_listing():
    r = client.get("/entries")
    assert r.status_code == 200
    body = r.json()
    assert len(body) == 33
    by_id = {e["id"]: e for e in body}
    e38 = by_id["eq-38"]
    assert e38["equation"] == "Eq. (38)"
    assert e38["section"] == 2
    assert [p["name"] for p in e38["params"]] == ["s", "γ", "ν"]
    assert all(c["text"] for c in e38["conditions"])


def test_entries_section_filter():
    r = client.get("/entries", params={"section": 3})
    ids = [e["id"] for e in r.json()]
    assert ids == ["novel-V", "novel-VI", "novel-VII"]


def test_eval_basic():
    r = client.post(
        "/eval", json={"entry": "eq-111", "params": {"a": 2}}
    )
    assert r.status_code == 200
    body = r.json()
    np.testing.assert_allclose(body["value"], [math.pi / 4, 0.0], rtol=1e-12)
    assert body["conditions_ok"] is True
    assert body["violated"] == []


def test_eval_ascii_alias_and_string_params():
    r = client.post(
        "/eval",
        json={"entry": "eq-38", "params": {"s": "5", "gamma": 2, "nu": "1"}},
    )
    assert r.status_code == 200
    np.testing.assert_allclose(r.json()["value"], [4 / 105, 0.0], rtol=1e-12)


def test_eval_complex_param_forms():
    # [re, im] pairs and "a+bi" strings both parse
    r1 = client.post(
        "/eval",
        json={"entry": "eq-38", "params": {"s": [5, 1], "γ": 2, "ν": 1}},
    )
    r2 = client.post(
        "/eval",
        json={"entry": "eq-38", "params": {"s": "5+1i", "γ": 2, "ν": 1}},
    )
    assert r1.status_code == r2.status_code == 200
    assert r1.json()["value"] == r2.json()["value"]
    assert r1.json()["value"][1] != 0.0


def test_eval_unknown_entry_404():
    r = client.post("/eval", json={"entry": "eq-999", "params": {}})
    assert r.status_code == 404
    assert "eq-999" in r.json()["detail"]


def test_eval_condition_violation_422():
    r = client.post(
        "/eval",
        json={"entry": "entry-I", "params": {"s": 1, "β": 1, "ν": 1, "m": 1}},
    )
    assert r.status_code == 422
    detail = r.json()["detail"]
    assert detail["violated"]
    assert any("Re(s" in t for t in detail["violated"])


def test_eval_relaxed_reports_violations():
    r = client.post(
        "/eval",
        json={
            "entry": "entry-I",
            "params": {"s": 1, "β": 1, "ν": 1, "m": 1},
            "relaxed": True,
        },
    )
    assert r.status_code == 200
    body = r.json()
    assert body["conditions_ok"] is False
    assert body["violated"]


def test_eval_advisory_listed():
    r = client.post(
        "/eval", json={"entry": "novel-V", "params": {"α": 0, "β": 1.5, "p": 1}}
    )
    assert r.status_code == 200
    body = r.json()
    assert body["conditions_ok"] is True
    assert body["advisories"] == ["Re(β) < 1"]


def test_eval_with_oracle():
    r = client.post(
        "/eval",
        json={"entry": "novel-V", "params": {"α": 0, "β": 1, "p": 1}, "oracle": True},
    )
    assert r.status_code == 200
    body = r.json()
    np.testing.assert_allclose(body["value"], [1.0, 0.0], rtol=1e-12)
    np.testing.assert_allclose(body["oracle"], [1.0, 0.0], rtol=1e-9)
    assert body["difference"] <= 1e-9


def test_eval_oracle_unavailable_note():
    r = client.post(
        "/eval",
        json={
            "entry": "entry-I",
            "params": {"s": 1, "β": 1, "ν": 1, "m": 1},
            "relaxed": True,
            "oracle": True,
        },
    )
    assert r.status_code == 200
    body = r.json()
    assert body["oracle"] is None
    assert "decay rate" in body["note"]


def test_expand():
    r = client.post("/expand", json={"kind": "cos", "exponent": 2, "frequency": 1.0})
    assert r.status_code == 200
    body = r.json()
    assert body["rendered"] == "0.5·cos(2x) + 0.5"
    assert len(body["terms"]) == 2
    assert body["laplace"] is None


def test_expand_with_laplace():
    r = client.post(
        "/expand",
        json={"kind": "sin", "exponent": 1, "frequency": 2.0, "laplace_s": 1.0},
    )
    body = r.json()
    np.testing.assert_allclose(body["laplace"], [0.4, 0.0], rtol=1e-12)


def test_expand_bad_kind_422():
    r = client.post("/expand", json={"kind": "tan", "exponent": 2})
    assert r.status_code == 422
    r = client.post("/expand", json={"kind": "cos", "exponent": 0})
    assert r.status_code == 422


def test_expand_laplace_outside_convergence_422():
    r = client.post(
        "/expand",
        json={"kind": "cosh", "exponent": 3, "frequency": 1.0, "laplace_s": 2.0},
    )
    assert r.status_code == 422


def test_verify_single():
    r = client.post(
        "/verify", json={"target": "novel-V", "grid": "α=0;β=1;p=1", "tol": 1e-9}
    )
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] is True
    (summary,) = body["reports"]
    assert summary["entry"] == "novel-V"
    assert summary["passes"] == 1 and summary["fails"] == 0
    assert "summary: 1 pass" in body["tables"][0]
    header = json.loads(body["jsonl"].splitlines()[0])
    assert header["entry"] == "novel-V"
    assert header["tol"] == 1e-9


def test_verify_alias_grid():
    r = client.post(
        "/verify", json={"target": "eq-38", "grid": "s=4:6:3;gamma=1;nu=1"}
    )
    assert r.status_code == 200
    body = r.json()
    assert body["reports"][0]["passes"] == 3


def test_verify_section_all():
    r = client.post("/verify", json={"target": "all", "section": 4})
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] is True
    assert [s["entry"] for s in body["reports"]] == [
        "eq-74", "eq-76", "eq-78", "eq-80",
    ]
    assert body["jsonl"].count('"entry"') == 4


def test_verify_unknown_404():
    r = client.post("/verify", json={"target": "eq-999"})
    assert r.status_code == 404


def test_verify_bad_grid_422():
    r = client.post("/verify", json={"target": "eq-38", "grid": "s=1;s=2"})
    assert r.status_code == 422
