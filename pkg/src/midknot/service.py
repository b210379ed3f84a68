"""JSON-over-HTTP service around curve fitting.

Request bodies are parsed by hand rather than through response-model
validation so that every malformed input, whatever its shape, maps to a
400 with the same ``{"error", "detail", "index"?}`` envelope the CLI
prints; bad input never surfaces as a 500.
"""
from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from .datasets import fixture_names, get_fixture
from .errors import CurveError, InvalidRequest, ParseError
from .grid import KnotPlacement, default_placement, placement_from_knots
from .response import DEFAULT_SAMPLES, build_curve_response, dumps

from . import datasets


def _error_response(exc: CurveError, status: int = 400) -> JSONResponse:
    return JSONResponse(status_code=status, content=exc.to_dict())


def _require_number(obj, key: str) -> float:
    if isinstance(obj, bool) or not isinstance(obj, (int, float)):
        raise InvalidRequest(f"{key!r} must be a number, got {obj!r}")
    return float(obj)


def _parse_curve_request(body) -> tuple:
    if not isinstance(body, dict):
        raise InvalidRequest("request body must be a JSON object")
    for key in ("tau", "F"):
        if key not in body:
            raise InvalidRequest(f"request is missing {key!r}")
    tau = datasets.coerce_number_list(body["tau"], "tau")
    F = datasets.coerce_number_list(body["F"], "F")
    dataset = datasets.validate_series(tau, F, None)
    grid = dataset.grid()

    if "knots" in body and "placement" in body:
        raise InvalidRequest("give either 'knots' or 'placement', not both")
    if "knots" in body:
        knots = body["knots"]
        if isinstance(knots, dict):
            knots = knots.get("x")
        placement = placement_from_knots(
            grid, datasets.coerce_number_list(knots, "knots")
        )
    elif "placement" in body:
        raw = body["placement"]
        if not isinstance(raw, dict) or "alpha2" not in raw or "beta" not in raw:
            raise InvalidRequest(
                "'placement' must be an object with 'alpha2' and 'beta'"
            )
        placement = KnotPlacement(
            alpha2=_require_number(raw["alpha2"], "alpha2"),
            beta=datasets.coerce_number_list(raw["beta"], "beta"),
        )
    else:
        placement = default_placement(grid.N)

    samples = body.get("samples", DEFAULT_SAMPLES)
    return grid, placement, samples


def create_app(static_dir: str | Path | None = None) -> FastAPI:
    """Build the service app; optionally serve a static UI bundle at /."""
    app = FastAPI(openapi_url=None, docs_url=None, redoc_url=None)

    @app.exception_handler(CurveError)
    async def _curve_error(_request: Request, exc: CurveError):
        return _error_response(exc)

    @app.get("/api/health")
    async def health():
        return {"status": "ok"}

    @app.get("/api/fixtures")
    async def fixtures():
        out = []
        for name in fixture_names():
            fx = get_fixture(name)
            out.append({
                "name": name,
                "points": len(fx.dataset.tau),
                "presets": sorted(fx.presets),
            })
        return {"fixtures": out}

    @app.get("/api/fixtures/{name}")
    async def fixture(name: str):
        try:
            fx = get_fixture(name)
        except KeyError:
            return JSONResponse(
                status_code=404,
                content={"error": "UnknownFixture",
                         "detail": f"no fixture named {name!r}"},
            )
        return {
            "name": name,
            "tau": list(fx.dataset.tau),
            "F": list(fx.dataset.F),
            "presets": {key: list(x) for key, x in sorted(fx.presets.items())},
        }

    @app.post("/api/curve")
    async def curve(request: Request):
        try:
            body = await request.json()
        except Exception:
            raise ParseError("request body is not valid JSON") from None
        grid, placement, samples = _parse_curve_request(body)
        payload = build_curve_response(grid, placement, samples)
        return Response(content=dumps(payload), media_type="application/json")

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True))

    return app
