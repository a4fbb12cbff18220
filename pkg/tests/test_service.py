"""HTTP surface: request/response schemas, error mapping."""

import asyncio

import httpx
import pytest

from groupgraphs.service.app import app


class AppClient:
    """Drive the ASGI app from synchronous test code."""

    def _request(self, method, url, **kw):
        async def go():
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(transport=transport,
                                         base_url="http://t") as c:
                return await c.request(method, url, **kw)

        return asyncio.run(go())

    def get(self, url, **kw):
        return self._request("GET", url, **kw)

    def post(self, url, **kw):
        return self._request("POST", url, **kw)


@pytest.fixture(scope="module")
def client():
    return AppClient()


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_build_endpoint(client):
    r = client.post("/build", json={"spec": "S:4"})
    assert r.status_code == 200
    body = r.json()
    assert body["order"] == 24 and body["soluble"] and not body["abelian"]
    assert body["schema_version"] == 1


def test_build_rejects_bad_spec(client):
    r = client.post("/build", json={"spec": "Q:4"})
    assert r.status_code == 400
    assert "Q:4" in r.json()["error"]


def test_graph_endpoint_with_exports(client):
    r = client.post("/graph", json={"spec": "Dic:3", "kind": "virt-independence",
                                    "dot": True, "csv": True})
    assert r.status_code == 200
    body = r.json()
    assert body["report"]["diameter"] == 3
    assert body["report"]["isolated"] == [0]
    assert body["dot"].startswith("graph")
    assert body["csv"].splitlines()[0] == "u,v"


def test_graph_rejects_unknown_kind(client):
    r = client.post("/graph", json={"spec": "C:4", "kind": "spectral"})
    assert r.status_code == 400


def test_mingen_endpoint(client):
    r = client.post("/mingen", json={"spec": "S:4"})
    body = r.json()
    assert (body["d"], body["m"]) == (2, 3)
    assert set(body["witnesses"]) == {"2", "3"}
    assert body["csv"].startswith("group,d,m,size,witness")


def test_construction_endpoint(client):
    r = client.post("/construction", json={"t": 1, "samples": 10, "seed": 1})
    body = r.json()
    assert body["component_count"] == 1 and body["passed"]
    r2 = client.post("/construction",
                     json={"t": 1, "samples": 10, "seed": 1, "variant": "paper"})
    assert r2.json()["variant"] == "paper"


def test_seqprod_endpoint(client):
    fam = [f"path:{2 ** n}" for n in range(9)]
    r = client.post("/seqprod", json={"family": fam, "taus": [1.5, 3],
                                      "threshold": 2})
    body = r.json()
    assert body["all_separated"] and len(body["pairs"]) == 1


def test_seqprod_error_mapped_to_400(client):
    r = client.post("/seqprod", json={"family": ["path:4"], "taus": [2, 2],
                                      "threshold": 1})
    assert r.status_code == 400


def test_verify_endpoint_single_suite(client):
    r = client.post("/verify", json={"suite": "criterion-equivalence"})
    body = r.json()
    assert body["passed"] and len(body["suites"]) == 1
    assert body["suites"][0]["name"] == "criterion-equivalence"


def test_verify_unknown_suite(client):
    assert client.post("/verify", json={"suite": "nope"}).status_code == 400
