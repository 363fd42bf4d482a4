"""Stateless JSON-over-HTTP facade for the explorer UI.

Every response body is an envelope carrying exactly one of ``result`` or
``error``.  Schema problems map to HTTP 400, domain errors (invalid quiver,
vertex out of range) to 422; a 200 always means success.  Handlers share no
mutable state, so requests may be served concurrently without coordination.
"""

from __future__ import annotations

import base64
import binascii
import json
import os
from typing import Any, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import documents
from .canon import canonical_form
from .dynkin import predict_finiteness
from .enumeration import DEFAULT_MAX_QUIVERS, EnumerationConfig, enumerate_class
from .errors import ColouredQuiverError, DocumentError
from .quiver import gabriel, mutate, mutate_seq, validate

DEFAULT_TIME_BUDGET = 10.0
MAX_TIME_BUDGET = 60.0
DEFAULT_PAGE_SIZE = 50


class QuiverBody(BaseModel):
    quiver: dict


class MutateBody(QuiverBody):
    vertex: int


class MutateSeqBody(QuiverBody):
    vertices: list[int]


class ClassifyBody(QuiverBody):
    max: int = DEFAULT_MAX_QUIVERS
    time_budget: Optional[float] = None


class EnumerateBody(QuiverBody):
    max: int = DEFAULT_MAX_QUIVERS
    page_size: int = DEFAULT_PAGE_SIZE
    token: Optional[str] = None
    time_budget: Optional[float] = None


def _ok(result: Any) -> JSONResponse:
    return JSONResponse({"ok": True, "result": result})


def _fail(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        {"ok": False, "error": {"code": code, "message": message}},
        status_code=status,
    )


def _quiver_from(body: QuiverBody):
    # schema errors in the embedded document are the caller's fault: 400
    return documents.doc_to_quiver(body.quiver, permissive=True, where="quiver")


def _require_valid(q) -> None:
    violations = validate(q)
    if violations:
        detail = "; ".join(str(v) for v in violations[:6])
        raise ColouredQuiverError(f"invalid quiver: {detail}")


def _budget(requested: Optional[float]) -> float:
    if requested is None:
        return DEFAULT_TIME_BUDGET
    return max(0.1, min(float(requested), MAX_TIME_BUDGET))


def _encode_token(offset: int) -> str:
    return base64.urlsafe_b64encode(json.dumps({"offset": offset}).encode()).decode()


def _decode_token(token: str) -> int:
    try:
        payload = json.loads(base64.urlsafe_b64decode(token.encode()))
        offset = payload["offset"]
    except (binascii.Error, ValueError, KeyError, TypeError):
        raise DocumentError(f"bad continuation token {token!r}")
    if not isinstance(offset, int) or offset < 0:
        raise DocumentError(f"bad continuation token {token!r}")
    return offset


def create_app(ui_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="colourq", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def _on_schema_error(request: Request, exc: RequestValidationError):
        return _fail(400, "schema_violation", str(exc.errors()[:3]))

    @app.exception_handler(DocumentError)
    async def _on_document_error(request: Request, exc: DocumentError):
        return _fail(400, exc.code, str(exc))

    @app.exception_handler(ColouredQuiverError)
    async def _on_domain_error(request: Request, exc: ColouredQuiverError):
        return _fail(422, exc.code, str(exc))

    @app.get("/api/health")
    def health():
        return _ok("ok")

    @app.post("/api/validate")
    def api_validate(body: QuiverBody):
        q = _quiver_from(body)
        violations = validate(q)
        return _ok({
            "valid": not violations,
            "violations": [
                {"property": v.prop, "from": v.source, "to": v.target, "colour": v.colour}
                for v in violations
            ],
            "canonical": canonical_form(q).hex(),
        })

    @app.post("/api/mutate")
    def api_mutate(body: MutateBody):
        q = _quiver_from(body)
        result = mutate(q, body.vertex)
        return _ok({
            "quiver": documents.quiver_to_doc(result),
            "canonical": canonical_form(result).hex(),
        })

    @app.post("/api/mutate_seq")
    def api_mutate_seq(body: MutateSeqBody):
        q = _quiver_from(body)
        result = mutate_seq(q, body.vertices)
        return _ok({
            "quiver": documents.quiver_to_doc(result),
            "canonical": canonical_form(result).hex(),
        })

    @app.post("/api/gabriel")
    def api_gabriel(body: QuiverBody):
        q = _quiver_from(body)
        _require_valid(q)
        return _ok(documents.gabriel_to_doc(gabriel(q)))

    @app.post("/api/classify")
    def api_classify(body: ClassifyBody):
        q = _quiver_from(body)
        verdict = predict_finiteness(
            q, EnumerationConfig(max_quivers=body.max),
            time_budget=_budget(body.time_budget),
        )
        return _ok(documents.verdict_to_doc(verdict))

    @app.post("/api/enumerate")
    def api_enumerate(body: EnumerateBody):
        q = _quiver_from(body)
        offset = _decode_token(body.token) if body.token else 0
        page_size = max(1, min(body.page_size, 1000))
        result = enumerate_class(
            q, EnumerationConfig(max_quivers=body.max),
            time_budget=_budget(body.time_budget),
        )
        reps = [
            {"quiver": documents.quiver_to_doc(rep), "canonical": key.hex()}
            for key, rep in result.sorted_by_canonical()
        ]
        page = reps[offset : offset + page_size]
        next_offset = offset + page_size
        token = _encode_token(next_offset) if next_offset < len(reps) else None
        return _ok({
            "status": str(result.status),
            "size": result.size,
            "depth_reached": result.depth_reached,
            "representatives": page,
            "next": token,
        })

    if ui_dir and os.path.isdir(ui_dir):
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
