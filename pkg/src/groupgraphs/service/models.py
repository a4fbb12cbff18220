"""Pydantic request/response models for the HTTP service.

These mirror the JSON report schemas emitted by the CLI: every response
carries schema_version so golden files can detect format drift.
"""

from __future__ import annotations

from typing import Any, Optional, Union

from pydantic import BaseModel, Field


class BuildRequest(BaseModel):
    spec: str = Field(description="group spec, e.g. 'S:4', 'Dic:3', 'C:2*Q:8'")


class BuildReport(BaseModel):
    schema_version: int = 1
    group: str
    order: int
    abelian: bool
    soluble: bool
    generators: dict


class GraphRequest(BaseModel):
    spec: str
    kind: str = Field(description="generating | independence | virt-independence")
    dot: bool = False
    csv: bool = False


class GraphReportModel(BaseModel):
    schema_version: int = 1
    kind: str
    group: str
    order: int
    vertex_count: int
    isolated: list
    non_isolated_count: int
    components: list
    component_count: int
    diameter: Union[int, str, None]
    component_diameters: list
    edge_count: int


class GraphResponse(BaseModel):
    report: GraphReportModel
    dot: Optional[str] = None
    csv: Optional[str] = None


class MingenRequest(BaseModel):
    spec: str


class MingenReport(BaseModel):
    schema_version: int = 1
    group: str
    order: int
    d: int
    m: int
    witnesses: dict   # size (str) -> sorted element ids
    csv: str


class ConstructionRequest(BaseModel):
    t: int = Field(ge=1)
    samples: int = Field(default=100, ge=0)
    seed: int = 1
    variant: str = Field(default="corrected", description="corrected | paper")


class SeqprodRequest(BaseModel):
    family: list = Field(description="family lines: 'path:<len>' or "
                                     "'group:<spec>:<kind>'")
    taus: list
    threshold: int


class VerifyRequest(BaseModel):
    suite: str = Field(default="", description="suite name, empty = all")


class SuiteResult(BaseModel):
    name: str
    criterion: str
    passed: bool
    details: Any


class VerifyReport(BaseModel):
    schema_version: int = 1
    suites: list
    passed: bool
