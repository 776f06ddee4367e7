"""HTTP JSON API over the pipeline.

POST /summarize        {"text": "..."} -> Summary JSON
GET  /provision/{num}  provision JSON for statute drill-down
GET  /health           liveness probe

Stateless by design: the pasted docket is never written to disk or logged;
the service only translates documents the caller already holds.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .criminal_code import ProvisionNotFoundError, lookup
from .errors import InputError, InputTooLargeError
from .models import LawCitation, PartStatus
from .pipeline import Components, summarize
from .serialize import summary_to_dict


class SummarizeRequest(BaseModel):
    text: str


def create_app(components: Components | None = None, static_dir: str | Path | None = None) -> FastAPI:
    comps = components or Components()  # fail fast: store and tables load here
    app = FastAPI(title="plumitif", version="0.1.0")

    @app.exception_handler(RequestValidationError)
    async def malformed_request(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": "malformed request body"})

    @app.get("/health")
    def health():
        return {"status": "ok", "provisions": len(comps.store)}

    @app.post("/summarize")
    def summarize_endpoint(payload: SummarizeRequest):
        try:
            summary = summarize(payload.text, comps)
        except InputTooLargeError as exc:
            return JSONResponse(status_code=413, content={"error": str(exc)})
        except InputError as exc:
            return JSONResponse(status_code=400, content={"error": str(exc)})
        body = summary_to_dict(summary)
        realized = [
            summary.accused_paragraph,
            summary.plaintiff_paragraph,
            *summary.charge_paragraphs,
        ]
        if not any(p is not None for p in realized):
            return JSONResponse(status_code=422, content=body)
        return body

    @app.get("/provision/{number}")
    def provision_endpoint(number: str):
        try:
            result = lookup(comps.store, LawCitation(act="C.CR.", provision=number))
        except ProvisionNotFoundError:
            return JSONResponse(status_code=404, content={"error": f"provision {number} not found"})
        p = result.provision
        return {
            "number": p.number,
            "title": p.title,
            "text": p.text,
            "repealed": p.repealed,
            "paragraphs": {
                label: {"text": node.text, "subparagraphs": dict(node.subparagraphs)}
                for label, node in p.paragraphs.items()
            },
        }

    if static_dir is not None and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="webapp")

    return app


def serve(
    components: Components | None = None,
    host: str = "127.0.0.1",
    port: int = 8000,
    static_dir: str | Path | None = None,
) -> None:
    import uvicorn

    uvicorn.run(
        create_app(components, static_dir=static_dir),
        host=host,
        port=port,
        log_level="warning",
        access_log=False,
    )
