"""HTTP service wrapping the core package.

Run with `gigraph serve` or `uvicorn gigraph.service:app`. Request validation
is pydantic's; domain errors map to 400, cap violations to 409.
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, Field

from . import payloads
from .errors import CapExceeded, GIGraphError, TooLarge

app = FastAPI(
    title="gigraph",
    description="GI-graph construction, automorphism groups, and "
                "transitivity/Cayley classification with a brute-force oracle.",
    version="0.1.0",
)


class SpecRequest(BaseModel):
    n: int = Field(ge=3, description="modulus")
    steps: list[int] = Field(min_length=1, description="step values j_0..j_{t-1}")


class BuildRequest(SpecRequest):
    format: Literal["json", "dot", "edges"] = "json"


class CanonResponse(BaseModel):
    n: int
    input: list[int]
    standard: list[int]
    canonical: list[int]
    witness_unit: int


class AutRequest(SpecRequest):
    elements: bool = False
    verify: bool = False


class ClassifyRequest(SpecRequest):
    oracle: bool = False


class CensusRequest(BaseModel):
    n_lo: int = Field(ge=3)
    n_hi: int = Field(ge=3)
    t: int = Field(ge=1)
    connected_only: bool = False
    verify: bool = False
    findings: bool = False
    format: Literal["json", "csv"] = "json"


class LayoutRequest(SpecRequest):
    radii: Optional[list[float]] = None
    check_unit: bool = False
    svg: bool = False


class IsoRequest(BaseModel):
    n: int = Field(ge=3)
    steps_a: list[int] = Field(min_length=1)
    steps_b: list[int] = Field(min_length=1)


class IsoResponse(BaseModel):
    isomorphic: bool
    witness: Optional[list[int]]


class CayleyResponse(BaseModel):
    order: int
    regular_subgroup_found: bool
    subgroup_order: Optional[int]


class GirthResponse(BaseModel):
    girth: int
    has_4_cycle: bool


@app.exception_handler(GIGraphError)
async def domain_error_handler(request: Request, exc: GIGraphError):
    status = 409 if isinstance(exc, (CapExceeded, TooLarge)) else 400
    return JSONResponse(status_code=status,
                        content={"error": str(exc), "kind": type(exc).__name__})


@app.get("/")
def index():
    return {"service": "gigraph",
            "endpoints": ["/build", "/canon", "/aut", "/classify", "/census",
                          "/layout", "/oracle/aut", "/oracle/iso",
                          "/oracle/cayley", "/oracle/girth"]}


@app.post("/build")
def build_endpoint(req: BuildRequest):
    payload = payloads.build_payload(req.n, req.steps, req.format)
    if isinstance(payload, str):
        return PlainTextResponse(payload)
    return payload


@app.post("/canon", response_model=CanonResponse)
def canon_endpoint(req: SpecRequest):
    return payloads.canon_payload(req.n, req.steps)


@app.post("/aut")
def aut_endpoint(req: AutRequest):
    return payloads.aut_payload(req.n, req.steps,
                                elements=req.elements, verify=req.verify)


@app.post("/classify")
def classify_endpoint(req: ClassifyRequest):
    return payloads.classify_payload(req.n, req.steps, use_oracle=req.oracle)


@app.post("/census")
def census_endpoint(req: CensusRequest):
    payload, _ = payloads.census_payload(
        req.n_lo, req.n_hi, req.t, connected_only=req.connected_only,
        verify=req.verify, fmt=req.format, findings=req.findings)
    if isinstance(payload, str):
        return PlainTextResponse(payload, media_type="text/csv")
    return payload


@app.post("/layout")
def layout_endpoint(req: LayoutRequest):
    if req.svg:
        doc = payloads.layout_payload(req.n, req.steps, radii=req.radii,
                                      want_svg=True)
        return PlainTextResponse(doc, media_type="image/svg+xml")
    return payloads.layout_payload(req.n, req.steps, radii=req.radii,
                                   check_unit=req.check_unit)


@app.post("/oracle/aut")
def oracle_aut_endpoint(req: SpecRequest):
    return payloads.oracle_aut_payload(req.n, req.steps)


@app.post("/oracle/iso", response_model=IsoResponse)
def oracle_iso_endpoint(req: IsoRequest):
    return payloads.oracle_iso_payload(req.n, req.steps_a, req.steps_b)


@app.post("/oracle/cayley", response_model=CayleyResponse)
def oracle_cayley_endpoint(req: SpecRequest):
    return payloads.oracle_cayley_payload(req.n, req.steps)


@app.post("/oracle/girth", response_model=GirthResponse)
def oracle_girth_endpoint(req: SpecRequest):
    return payloads.oracle_girth_payload(req.n, req.steps)
