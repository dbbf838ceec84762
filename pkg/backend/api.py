"""
FastAPI Application Module
REST API endpoints for the 5-move invariant engine
"""

import logging
from typing import Any, Dict, List, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field, field_validator

from config import Config
from engine import InvariantEngine, catalog_info
from errors import KnotMovesError

logger = logging.getLogger(__name__)

# Initialize FastAPI
app = FastAPI(title="Knot Moves API", version="1.0.0")

# CORS Configuration
app.add_middleware(
    CORSMiddleware,
    allow_origins=Config.CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# Pydantic Models
class ComputeRequest(BaseModel):
    spec: str = Field(min_length=1)
    kauffman: bool = False
    point: Optional[List[int]] = None

    @field_validator("point")
    @classmethod
    def two_powers(cls, v):
        if v is not None and len(v) != 2:
            raise ValueError("point is [a_power, p_power]")
        return v


class CompareRequest(BaseModel):
    spec_a: str = Field(min_length=1)
    spec_b: str = Field(min_length=1)


class MontesinosRequest(BaseModel):
    spec: str = Field(min_length=1)
    report: bool = True


class VerdictResponse(BaseModel):
    spec_a: str
    spec_b: str
    verdict: str
    by: List[str]


class HealthResponse(BaseModel):
    status: str
    bracket_limit: int
    kauffman_limit: int
    bracket_method: str
    catalog: Dict[str, Any]


engine = InvariantEngine()


def _fail(error: KnotMovesError) -> HTTPException:
    logger.warning("❌ %s: %s", type(error).__name__, error)
    return HTTPException(status_code=error.http_status, detail=str(error))


@app.get("/health", response_model=HealthResponse)
async def health_check():
    """Health check endpoint"""
    try:
        info = catalog_info()
    except KnotMovesError as e:
        raise _fail(e)
    return HealthResponse(
        status="healthy",
        bracket_limit=engine.bracket_limit,
        kauffman_limit=engine.kauffman_limit,
        bracket_method=engine.method,
        catalog=info,
    )


@app.post("/compute")
def compute(request: ComputeRequest):
    """Invariant report of one link spec"""
    try:
        point = tuple(request.point) if request.point else None
        return engine.report(request.spec, kauffman=request.kauffman, point=point).to_json()
    except KnotMovesError as e:
        raise _fail(e)


@app.post("/compare", response_model=VerdictResponse)
def compare(request: CompareRequest):
    """Try to distinguish two links by their 5-move invariants"""
    try:
        return VerdictResponse(**engine.compare(request.spec_a, request.spec_b).to_json())
    except KnotMovesError as e:
        raise _fail(e)


@app.get("/reduce/rational/{p}/{q}")
def reduce_rational(p: int, q: int):
    try:
        return engine.reduce_rational(p, q).to_json()
    except KnotMovesError as e:
        raise _fail(e)


@app.post("/reduce/montesinos")
def reduce_montesinos(request: MontesinosRequest):
    try:
        return engine.reduce_montesinos(request.spec, with_report=request.report).to_json()
    except KnotMovesError as e:
        raise _fail(e)


@app.get("/tables/{which}")
def tables(which: str, only: Optional[str] = None):
    """Recomputed catalog table with PASS/FAIL per column"""
    try:
        if which in ("4.1", "41"):
            rows = engine.table41(int(only) if only else None)
        elif which in ("7.1", "71"):
            rows = engine.table71(only)
        else:
            raise HTTPException(status_code=404, detail=f"unknown table '{which}'")
    except ValueError:
        raise HTTPException(status_code=400, detail=f"bad row number '{only}'")
    except KnotMovesError as e:
        raise _fail(e)
    return {"table": which, "rows": [r.to_json() for r in rows],
            "failed": [r.key for r in rows if r.status == "FAIL"]}


@app.get("/density/{kmax}")
def density(kmax: int):
    try:
        return [p.to_json() for p in engine.density(kmax)]
    except KnotMovesError as e:
        raise _fail(e)


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host=Config.API_HOST, port=Config.API_PORT)
