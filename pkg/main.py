"""
FastAPI backend for the quantum group algebra workbench.
Exposes normal forms, Hopf checks, the domain test and the verification suites.
"""

import asyncio
import logging
from datetime import datetime
from typing import Optional

import uvicorn
from dotenv import load_dotenv
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from algebra.errors import WorkbenchError
from cli.expr_parser import parse_expr
from models.document_models import CocycleDocument, PresentationDocument
from models.report_models import DomainReport, LemmaReport
from services.catalog_service import CatalogService
from services.codec_service import CodecService
from services.hopf_service import check_hopf_axioms, make_hopf_structure
from services.rewriting_service import reduce
from services.su2_service import domain_test
from services.verify_service import available_suites, run_suite
from storage.presentation_store import PresentationStore
from utils.metrics import timer
from utils.settings import get_settings

load_dotenv()

settings = get_settings()

logging.basicConfig(
    level=getattr(logging, settings.log_level, logging.INFO),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

app = FastAPI(
    title="Quantum Group Algebra Workbench API",
    description="Exact rewriting, Hopf and cocycle computations over Q(i)",
    version="1.0.0",
    docs_url="/docs",
    redoc_url="/redoc",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# ---------- Global state ----------
catalog = CatalogService()
store = PresentationStore(str(settings.cache_dir))

SCHEMAS = {
    "lemma-report": LemmaReport,
    "domain-report": DomainReport,
    "presentation": PresentationDocument,
    "cocycle": CocycleDocument,
}


# ---------- Request models ----------

class NormalizeRequest(BaseModel):
    algebra: str = Field(..., description="Algebra name or alias: o+, u+, s1, su2, h, a")
    expr: str = Field(..., min_length=1, description="Element expression")
    n: int = Field(default=2, ge=2)
    degree: Optional[int] = Field(None, description="Completion degree; catalog default when omitted")


class HopfCheckRequest(BaseModel):
    algebra: str
    n: int = Field(default=2, ge=2)
    degree_bound: int = Field(default=3, ge=1)
    samples: int = Field(default=20, ge=0)
    seed: Optional[int] = None


class DomainTestRequest(BaseModel):
    samples: int = Field(default=1000, ge=1)
    seed: Optional[int] = None
    max_alpha: int = Field(default=3, ge=0)
    max_gamma: int = Field(default=3, ge=0)


class VerifyRequest(BaseModel):
    n: int = Field(default=2, ge=2)
    seed: Optional[int] = None
    degree: Optional[int] = None
    xi: Optional[str] = Field(None, description="Cocycle value on z, as an expression")
    control: bool = Field(default=False, description="Run on the corrupted input; the suite must fail")
    tables: Optional[int] = Field(None, ge=1, description="Random cocycle tables (determination; default 20)")
    samples: Optional[int] = Field(None, ge=1, description="Random elements per sampling check")


def _seed(value: Optional[int]) -> int:
    return settings.seed if value is None else value


# ---------- Health ----------

@app.get("/")
@app.head("/")
async def root():
    return {
        "message": "Quantum Group Algebra Workbench API is running",
        "version": "1.0.0",
        "timestamp": datetime.utcnow().isoformat(),
    }


@app.get("/health")
@app.head("/health")
async def health_check():
    return {
        "status": "healthy",
        "timestamp": datetime.utcnow().isoformat(),
        "cached_presentations": len(store.list_cached()),
        "suite_timings": timer.get_totals(),
        "suite_runs": timer.get_counts(),
        "suites_running": timer.in_flight(),
    }


# ---------- Catalog ----------

@app.get("/api/algebras")
async def list_algebras():
    return catalog.get_available_algebras()


@app.get("/api/algebras/{name}")
async def get_algebra(name: str):
    """One catalog entry, looked up by canonical name or alias."""
    info = catalog.get_info(name)
    if info is None:
        raise HTTPException(status_code=404, detail=f"Unknown algebra: {name}")
    return {"name": catalog.resolve(name), **info}


@app.get("/api/schema/{name}")
async def get_schema(name: str):
    model = SCHEMAS.get(name)
    if model is None:
        raise HTTPException(status_code=404, detail=f"Unknown schema: {name}. Available: {list(SCHEMAS.keys())}")
    return model.model_json_schema(by_alias=True)


# ---------- Computations ----------

def _normalize(request: NormalizeRequest) -> dict:
    presentation = catalog.presentation(request.algebra, request.n, request.degree, store)
    p = parse_expr(request.expr, presentation)
    result = reduce(p, presentation)
    return {
        "algebra": presentation.name,
        "n": presentation.n,
        "input": request.expr,
        "normal_form": result.poly.to_text(presentation.order),
        "terms": CodecService.poly_to_json(result.poly),
        "certified": result.certified,
    }


@app.post("/api/normalize")
async def normalize(request: NormalizeRequest):
    try:
        return await asyncio.to_thread(_normalize, request)
    except WorkbenchError as e:
        raise HTTPException(status_code=400, detail=str(e))


def _hopf_check(request: HopfCheckRequest) -> dict:
    presentation = catalog.presentation(request.algebra, request.n, None, store)
    report = check_hopf_axioms(
        make_hopf_structure(presentation),
        degree_bound=request.degree_bound,
        samples=request.samples,
        seed=_seed(request.seed),
    )
    return report.model_dump(by_alias=True)


@app.post("/api/hopf-check")
async def hopf_check(request: HopfCheckRequest):
    try:
        return await asyncio.to_thread(_hopf_check, request)
    except WorkbenchError as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.post("/api/domain-test")
async def run_domain_test(request: DomainTestRequest):
    try:
        report = await asyncio.to_thread(
            domain_test, request.samples, request.max_alpha, request.max_gamma, _seed(request.seed),
        )
    except WorkbenchError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return report.model_dump(by_alias=True)


@app.post("/api/verify/{lemma_id}")
async def verify(lemma_id: str, request: VerifyRequest):
    if lemma_id not in available_suites():
        raise HTTPException(status_code=404, detail=f"Unknown suite: {lemma_id}. Available: {available_suites()}")
    try:
        report = await asyncio.to_thread(
            run_suite, lemma_id, request.n, _seed(request.seed), request.degree, request.xi, request.control,
            request.tables, request.samples,
        )
    except WorkbenchError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return report.model_dump(by_alias=True)


if __name__ == "__main__":
    uvicorn.run(
        "main:app",
        host="0.0.0.0",
        port=settings.port,
        reload=settings.environment == "development",
    )
