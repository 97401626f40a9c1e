"""HTTP front end over the core package.

Stateless request/response endpoints: /eval runs a self-contained program
and returns the rendered outputs, /fmt canonicalizes an interchange
document, /check-laws sweeps the law suite over a finite universe.  Run
with ``mnum serve`` or ``uvicorn mnum.service:app``.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from mnum import __version__
from mnum.expr import (
    EvalError,
    ExprSyntaxError,
    UnsupportedStyle,
    parse_program,
    render,
    run_program,
)
from mnum.interchange import DocumentError
from mnum.oracle import MUTATIONS, UniverseSpec, UniverseTooLarge, check_laws
from mnum.schemas import (
    CheckLawsRequest,
    CheckLawsResponse,
    EvalRequest,
    EvalResponse,
    FmtRequest,
    FmtResponse,
    HealthResponse,
    PolymsetDocument,
    UniverseModel,
)

app = FastAPI(
    title="mnum",
    version=__version__,
    description="Calculator for natural multidimensional numbers.",
)


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(version=__version__)


@app.post("/eval", response_model=EvalResponse)
def eval_program(req: EvalRequest) -> EvalResponse:
    try:
        statements = parse_program(req.source)
    except ExprSyntaxError as e:
        raise HTTPException(
            status_code=400,
            detail={
                "kind": "syntax-error",
                "message": str(e),
                "line": e.line,
                "column": e.column,
                "expected": list(e.expected),
            },
        ) from None
    try:
        values = run_program(statements, {})
        return EvalResponse(outputs=[render(v, req.style) for v in values])
    except EvalError as e:
        raise HTTPException(
            status_code=422,
            detail={
                "kind": "eval-error",
                "message": str(e),
                "line": e.line,
                "column": e.column,
            },
        ) from None
    except UnsupportedStyle as e:
        raise HTTPException(
            status_code=422, detail={"kind": "eval-error", "message": str(e)}
        ) from None


@app.post("/fmt", response_model=FmtResponse)
def fmt_document(req: FmtRequest) -> FmtResponse:
    try:
        pm, base = req.document.to_polymset()
    except DocumentError as e:
        raise HTTPException(
            status_code=422, detail={"kind": "document-error", "message": str(e)}
        ) from None
    return FmtResponse(document=PolymsetDocument.from_polymset(pm, base))


@app.post("/check-laws", response_model=CheckLawsResponse)
def check_laws_endpoint(req: CheckLawsRequest) -> CheckLawsResponse:
    try:
        spec = UniverseSpec(req.dim, tuple(req.max_index), req.max_mult)
        report = check_laws(
            spec,
            budget=req.budget,
            mul_fn=MUTATIONS[req.mutate] if req.mutate else None,
        )
    except (UniverseTooLarge, ValueError) as e:
        raise HTTPException(
            status_code=422, detail={"kind": "universe-error", "message": str(e)}
        ) from None
    doc = report.to_document()
    return CheckLawsResponse(
        universe=UniverseModel(**doc["universe"]),
        budget=doc["budget"],
        ok=doc["ok"],
        laws=doc["laws"],
    )
