"""HTTP/JSON API backing the authoring UI.

All routes live under ``/api/v1``. Request bodies for validate, render,
and card storage are raw card JSON documents; responses are either the
documented payload or the :class:`ApiErrorBody` shape, never a bare
string. The validate and render endpoints are pure functions of the
request, so responses with a pinned timestamp are byte-identical across
calls.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from dfmc.errors import ConflictError, EmptyInputError, RejectedInvalidError, StorageError
from dfmc.model import PIPELINE_PROCESSES, TOP_LEVEL_ELEMENTS
from dfmc.render import RenderOptions, emit_schema, parse_timestamp, to_json, to_markdown
from dfmc.store import CardStore
from dfmc.validation import (
    UNREADABLE_DOCUMENT,
    has_errors,
    lint_card,
    parse_card,
    sort_diagnostics,
)
from dfmc.vocab import FORENSIC_CLASSIFICATION, VOCABULARIES, canonicalize

DEFAULT_PORT = 8787


class DiagnosticBody(BaseModel):
    severity: str
    code: str
    path: str
    message: str


class ValidationBody(BaseModel):
    valid: bool
    diagnostics: list[DiagnosticBody]


class SavedBody(BaseModel):
    id: str


class CardSummaryBody(BaseModel):
    id: str
    domains: list[str]


class ApiErrorBody(BaseModel):
    status: int
    code: str
    message: str
    diagnostics: list[DiagnosticBody] = []


_ALLOWED_ERROR_STATUSES = {400, 404, 409, 422, 500}


class ApiError(Exception):
    """An error response: HTTP status, stable code, message, diagnostics."""

    def __init__(self, status: int, code: str, message: str, diagnostics=()):
        if status not in _ALLOWED_ERROR_STATUSES:
            raise ValueError(f"unsupported error status {status}")
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.diagnostics = tuple(diagnostics)

    def body(self) -> ApiErrorBody:
        return ApiErrorBody(
            status=self.status,
            code=self.code,
            message=self.message,
            diagnostics=[DiagnosticBody(**d.to_dict()) for d in self.diagnostics],
        )


def _diagnostic_bodies(diagnostics) -> list[DiagnosticBody]:
    return [DiagnosticBody(**d.to_dict()) for d in diagnostics]


def _static_json(payload) -> bytes:
    return json.dumps(payload, ensure_ascii=False, indent=2).encode("utf-8")


# Static data, rendered once so repeated GETs are byte-identical.
_VOCABULARIES_BYTES = _static_json(
    {
        vocab_id: [{"slug": t.slug, "label": t.label} for t in vocab.terms]
        for vocab_id, vocab in VOCABULARIES.items()
    }
)
_CHECKLISTS_BYTES = _static_json(
    {
        "top_level": [{"key": key, "label": label} for key, label in TOP_LEVEL_ELEMENTS],
        "pipeline": [{"key": key, "label": label} for key, label in PIPELINE_PROCESSES],
    }
)
_SCHEMA_BYTES = emit_schema()


def _parse_body(body: bytes):
    """Parse a request body as a card, mapping failures to API errors."""
    result = parse_card(body)
    if result.ok:
        return result
    first_error = next(d for d in result.diagnostics if d.severity == "error")
    if first_error.code == UNREADABLE_DOCUMENT:
        raise ApiError(
            400, first_error.code, "request body is not a JSON card document", result.diagnostics
        )
    raise ApiError(
        422, first_error.code, "card document is structurally invalid", result.diagnostics
    )


def _render_options(timestamp: str | None) -> RenderOptions:
    if timestamp is None:
        return RenderOptions()
    try:
        return RenderOptions(timestamp=parse_timestamp(timestamp))
    except ValueError:
        raise ApiError(
            400, "invalid_timestamp", f"timestamp {timestamp!r} is not an ISO-8601 instant"
        ) from None


def create_app(store: CardStore | Path | str, ui_dir: Path | str | None = None) -> FastAPI:
    """Build the application around one card store.

    When ``ui_dir`` points at a built frontend, it is served from the site
    root; the API works the same with or without it.
    """
    card_store = store if isinstance(store, CardStore) else CardStore(store)

    app = FastAPI(title="dfmc", docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST", "OPTIONS"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def _handle_api_error(request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content=exc.body().model_dump())

    @app.exception_handler(StarletteHTTPException)
    async def _handle_http_exception(request: Request, exc: StarletteHTTPException):
        code = {404: "not_found", 405: "method_not_allowed"}.get(exc.status_code, "http_error")
        body = ApiErrorBody(status=exc.status_code, code=code, message=str(exc.detail))
        return JSONResponse(status_code=exc.status_code, content=body.model_dump())

    @app.exception_handler(RequestValidationError)
    async def _handle_request_validation(request: Request, exc: RequestValidationError):
        body = ApiErrorBody(status=400, code="invalid_request", message=str(exc))
        return JSONResponse(status_code=400, content=body.model_dump())

    @app.get("/api/v1/vocabularies")
    async def vocabularies() -> Response:
        return Response(content=_VOCABULARIES_BYTES, media_type="application/json")

    @app.get("/api/v1/checklists")
    async def checklists() -> Response:
        return Response(content=_CHECKLISTS_BYTES, media_type="application/json")

    @app.get("/api/v1/schema")
    async def schema() -> Response:
        return Response(content=_SCHEMA_BYTES, media_type="application/json")

    @app.post("/api/v1/validate", response_model=ValidationBody)
    async def validate(request: Request) -> ValidationBody:
        result = _parse_body(await request.body())
        diagnostics = sort_diagnostics(list(result.diagnostics) + lint_card(result.card))
        return ValidationBody(
            valid=not has_errors(diagnostics),
            diagnostics=_diagnostic_bodies(diagnostics),
        )

    @app.post("/api/v1/render")
    async def render(request: Request, format: str | None = None, timestamp: str | None = None):
        if format not in ("json", "markdown"):
            raise ApiError(
                400, "unsupported_format", f"format must be json or markdown, got {format!r}"
            )
        opts = _render_options(timestamp)
        result = _parse_body(await request.body())
        if format == "markdown":
            return Response(
                content=to_markdown(result.card, opts),
                media_type="text/markdown; charset=utf-8",
            )
        return Response(content=to_json(result.card, opts), media_type="application/json")

    @app.post("/api/v1/cards", response_model=SavedBody, status_code=201)
    async def save_card(request: Request) -> SavedBody:
        result = _parse_body(await request.body())
        try:
            card_id = card_store.save(result.card)
        except RejectedInvalidError as exc:
            raise ApiError(
                422,
                exc.diagnostics[0].code,
                "card has error-severity findings and was not stored",
                exc.diagnostics,
            ) from None
        except ConflictError as exc:
            raise ApiError(409, "id_conflict", str(exc)) from None
        except StorageError as exc:
            raise ApiError(500, "storage_failure", str(exc)) from None
        return SavedBody(id=card_id)

    @app.get("/api/v1/cards", response_model=list[CardSummaryBody])
    async def list_cards(domain: str | None = None) -> list[CardSummaryBody]:
        selection = None
        if domain is not None:
            try:
                selection = canonicalize(FORENSIC_CLASSIFICATION, domain)
            except EmptyInputError:
                raise ApiError(400, "empty_domain_filter", "domain filter must not be blank") from None
        try:
            listing = card_store.list_cards(selection)
        except StorageError as exc:
            raise ApiError(500, "storage_failure", str(exc)) from None
        return [
            CardSummaryBody(id=c.id, domains=[s.label for s in c.classification.domains])
            for c in listing.cards
        ]

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
