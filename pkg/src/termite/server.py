"""HTTP facade: POST /prove plus static hosting for the web UI.

The prover itself is stateless; each request parses its own problem and
strategy and runs under a per-request deadline (default 10 s). When the
front end bundle (frontend/dist) is absent, GET / still serves a small
built-in page so the API remains usable on its own.
"""

from __future__ import annotations

import argparse
import json
import os
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.concurrency import run_in_threadpool
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles

from .cli import execute, parse_strategy, prepare
from .errors import TermiteError
from .solver import proof_body
from .trs import parse_trs

MAX_BODY = 64 * 1024
DEFAULT_TIMEOUT = 10.0

_FALLBACK_PAGE = """<!doctype html>
<html>
<head><meta charset="utf-8"><title>termite</title></head>
<body>
<h1>termite</h1>
<p>Termination prover for first-order term rewrite systems.
The web front end is not built; the JSON API is available:</p>
<pre>POST /prove
{"problem": "(VAR x)(RULES f(x) -> x)", "strategy": "lpo", "timeout": 10}</pre>
</body>
</html>
"""


def _dist_dir() -> Optional[Path]:
    env = os.environ.get("TERMITE_WEB_DIR")
    if env:
        p = Path(env)
        return p if p.is_dir() else None
    p = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    return p if p.is_dir() else None


def _run_job(problem: str, strategy: str, timeout: float) -> dict:
    trs = parse_trs(problem)
    strat = parse_strategy(strategy)
    outcome = execute(trs, prepare(strat, timeout))
    resp = {
        "result": "YES" if outcome.is_yes else "MAYBE",
        "proof": proof_body(outcome, strat.method),
    }
    if not outcome.is_yes:
        resp["reason"] = outcome.reason.value
    return resp


def create_app() -> FastAPI:
    app = FastAPI(title="termite", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.post("/prove")
    async def prove_route(request: Request):
        body = await request.body()
        if len(body) > MAX_BODY:
            return JSONResponse({"error": "request too large"}, status_code=413)
        try:
            payload = json.loads(body)
        except ValueError:
            return JSONResponse({"error": "invalid JSON"}, status_code=400)
        if not isinstance(payload, dict):
            return JSONResponse({"error": "expected a JSON object"}, status_code=400)
        problem = payload.get("problem")
        strategy = payload.get("strategy")
        if not isinstance(problem, str) or not isinstance(strategy, str):
            return JSONResponse(
                {"error": "fields 'problem' and 'strategy' are required strings"},
                status_code=400,
            )
        timeout = payload.get("timeout", DEFAULT_TIMEOUT)
        if not isinstance(timeout, (int, float)) or isinstance(timeout, bool) or timeout <= 0:
            return JSONResponse({"error": "'timeout' must be a positive number"}, status_code=400)
        try:
            resp = await run_in_threadpool(_run_job, problem, strategy, float(timeout))
        except TermiteError as e:
            return JSONResponse({"error": str(e)}, status_code=400)
        return JSONResponse(resp)

    dist = _dist_dir()
    if dist is not None:
        app.mount("/", StaticFiles(directory=dist, html=True), name="static")
    else:

        @app.get("/", response_class=HTMLResponse)
        async def index():
            return _FALLBACK_PAGE

    return app


def main() -> None:
    parser = argparse.ArgumentParser(
        prog="termite-server", description="HTTP API and web UI for termite."
    )
    parser.add_argument("--port", type=int, default=8080)
    parser.add_argument("--host", default="127.0.0.1")
    args = parser.parse_args()
    import uvicorn

    uvicorn.run(create_app(), host=args.host, port=args.port)


if __name__ == "__main__":
    main()
