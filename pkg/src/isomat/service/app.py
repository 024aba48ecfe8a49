"""FastAPI application wrapping the core package."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.requests import Request
from fastapi.responses import JSONResponse

from .. import __version__
from . import ops
from .models import (
    AnalyzeRequest,
    AnalyzeResponse,
    CircuitsRequest,
    CircuitsResponse,
    FixtureResponse,
    OrbitRequest,
    OrbitResponse,
    SplitResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(title="isomat", version=__version__)


@app.exception_handler(ops.ServiceError)
async def service_error_handler(request: Request, exc: ops.ServiceError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze_endpoint(request: AnalyzeRequest) -> AnalyzeResponse:
    return ops.analyze_graph(request)


@app.post("/split", response_model=SplitResponse)
def split_endpoint(request: AnalyzeRequest) -> SplitResponse:
    return ops.split_graph(request)


@app.post("/circuits", response_model=CircuitsResponse)
def circuits_endpoint(request: CircuitsRequest) -> CircuitsResponse:
    return ops.smallest_circuit(request)


@app.post("/orbit", response_model=OrbitResponse)
def orbit_endpoint(request: OrbitRequest) -> OrbitResponse:
    return ops.orbit_summary(request)


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(request: VerifyRequest) -> VerifyResponse:
    return ops.run_verification(request)


@app.get("/fixtures")
def fixtures_endpoint() -> list[str]:
    return ops.list_fixtures()


@app.get("/fixtures/{name}", response_model=FixtureResponse)
def fixture_endpoint(name: str) -> FixtureResponse:
    try:
        return ops.fixture_info(name)
    except ops.ServiceError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from exc
