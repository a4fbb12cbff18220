"""FastAPI service wrapping the core package.

Groups are cached per spec inside the worker process, so a long-running
service amortizes Cayley-table and lattice construction across requests.
Run with:  uvicorn groupgraphs.service.app:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse

from .. import verify as verify_mod
from ..build import build_group
from ..construction import Construction
from ..graphs import adjacency_matrix, edges_csv, edges_dot, graph_report
from ..group import GroupError
from ..mingen import tarski_csv, tarski_table
from ..seqprod import parse_family_line, CoordinateFamily, separation_demo
from ..structure import is_soluble
from . import models

app = FastAPI(title="groupgraphs", version="0.1.0")


@app.exception_handler(GroupError)
async def group_error_handler(request, exc: GroupError):
    return JSONResponse(status_code=400, content={"error": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/build", response_model=models.BuildReport)
def build(req: models.BuildRequest):
    G = build_group(req.spec)
    return models.BuildReport(
        group=G.label,
        order=G.order,
        abelian=G.is_abelian(),
        soluble=is_soluble(G),
        generators=dict(sorted(G.generators.items())),
    )


@app.post("/graph", response_model=models.GraphResponse)
def graph(req: models.GraphRequest):
    G = build_group(req.spec)
    rep = graph_report(G, req.kind)
    payload = models.GraphReportModel(**rep.to_dict())
    dot = csv = None
    if req.dot or req.csv:
        adj = adjacency_matrix(G, req.kind)
        if req.dot:
            dot = edges_dot(adj, f"{G.label} {req.kind}")
        if req.csv:
            csv = edges_csv(adj)
    return models.GraphResponse(report=payload, dot=dot, csv=csv)


@app.post("/mingen", response_model=models.MingenReport)
def mingen(req: models.MingenRequest):
    G = build_group(req.spec)
    table = tarski_table(G)
    return models.MingenReport(
        group=G.label,
        order=G.order,
        d=table.d,
        m=table.m,
        witnesses={str(k): sorted(v.members) for k, v in sorted(table.witnesses.items())},
        csv=tarski_csv(G.label, table),
    )


@app.post("/construction")
def construction(req: models.ConstructionRequest) -> dict:
    ctx = Construction(req.t, req.variant)
    return ctx.component_census(req.samples, req.seed)


@app.post("/seqprod")
def seqprod(req: models.SeqprodRequest) -> dict:
    graphs = [parse_family_line(str(line).strip()) for line in req.family
              if str(line).strip() and not str(line).strip().startswith("#")]
    if not graphs:
        raise GroupError("family has no coordinates")
    fam = CoordinateFamily(graphs)
    return separation_demo(fam, [float(t) for t in req.taus], req.threshold)


@app.post("/verify", response_model=models.VerifyReport)
def verify(req: models.VerifyRequest):
    try:
        report = verify_mod.run(req.suite)
    except KeyError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return models.VerifyReport(**report)
