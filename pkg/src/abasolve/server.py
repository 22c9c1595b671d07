"""HTTP surface: POST /api/solve takes DSL text and returns the JSON report."""

from __future__ import annotations

from fastapi import FastAPI, Request, Response

from .dsl import MAX_INPUT_BYTES
from .solver import solve, to_canonical_json


def create_app() -> FastAPI:
    app = FastAPI(title="abasolve")

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok"}

    @app.post("/api/solve")
    async def api_solve(request: Request) -> Response:
        body = await request.body()
        if len(body) > MAX_INPUT_BYTES:
            return Response(
                content='{"errors":[{"category":"parse","message":"input exceeds 1 MiB limit"}]}',
                status_code=413,
                media_type="application/json",
            )
        report = solve(body.decode("utf-8", errors="replace"))
        payload = to_canonical_json(report) + "\n"
        status = 200
        if report.has_error_category("parse") or report.has_error_category("validation"):
            status = 400
        return Response(content=payload, status_code=status,
                        media_type="application/json")

    return app


app = create_app()


def main() -> None:
    import uvicorn

    uvicorn.run(app, host="127.0.0.1", port=8000)
