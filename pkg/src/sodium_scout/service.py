"""HTTP delivery of the recommendation pipeline.

All shared state is one immutable catalog snapshot behind an atomic
holder; requests never mutate it, and a reload (SIGHUP) swaps in a
freshly loaded snapshot so in-flight requests see either the old or the
new catalog, never a mix. Response bodies are canonical JSON bytes, so
any request decodes to exactly the library ``recommend`` result.

Errors come back as ``{"code", "message"}`` with 400 for malformed
payloads, 422 for domain violations, and 500 otherwise.
"""

from __future__ import annotations

import json
import logging
import signal
import threading
from contextlib import asynccontextmanager
from datetime import timezone, tzinfo
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .catalog import Catalog, load_catalog
from .engine import parse_recommend_request, recommend, wire_response
from .physio import UnsupportedAge, sodium_need
from .ranking import InvalidFraction, ZeroTarget
from . import wire
from .wire import MalformedRequest, dumps_canonical

logger = logging.getLogger(__name__)

DEFAULT_ITEMS_LIMIT = 50
MAX_ITEMS_LIMIT = 500


class CatalogHolder:
    """Atomic reference to the current catalog snapshot."""

    def __init__(self, catalog: Catalog):
        self._lock = threading.Lock()
        self._catalog = catalog

    def get(self) -> Catalog:
        with self._lock:
            return self._catalog

    def swap(self, catalog: Catalog) -> Catalog:
        """Install a new snapshot; returns the previous one."""
        with self._lock:
            previous, self._catalog = self._catalog, catalog
            return previous


def _json_response(payload: dict, status_code: int = 200) -> Response:
    return Response(
        content=dumps_canonical(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _error(status_code: int, code: str, message: str) -> Response:
    return _json_response({"code": code, "message": message}, status_code)


_DOMAIN_CODES = {
    UnsupportedAge: "unsupported_age",
    InvalidFraction: "invalid_fraction",
    ZeroTarget: "zero_target",
}


def _map_exception(exc: Exception) -> Response:
    if isinstance(exc, MalformedRequest):
        return _error(400, "malformed_request", str(exc))
    for exc_type, code in _DOMAIN_CODES.items():
        if isinstance(exc, exc_type):
            return _error(422, code, str(exc))
    if isinstance(exc, ValueError):
        return _error(422, "invalid_value", str(exc))
    logger.exception("request failed")
    return _error(500, "internal_error", "internal error")


async def _read_json(request: Request) -> dict:
    body = await request.body()
    try:
        payload = json.loads(body)
    except json.JSONDecodeError as exc:
        raise MalformedRequest(f"body is not valid JSON ({exc.msg})") from exc
    if not isinstance(payload, dict):
        raise MalformedRequest("body must be a JSON object")
    return payload


def create_app(
    catalog: Catalog | None = None,
    catalog_path: str | Path | None = None,
    hours_tz: tzinfo = timezone.utc,
) -> FastAPI:
    """Build the service around a loaded catalog or a catalog file path."""
    if catalog is None:
        if catalog_path is None:
            raise ValueError("need a catalog or a catalog_path")
        catalog = load_catalog(catalog_path, hours_tz=hours_tz)
    holder = CatalogHolder(catalog)

    def reload_catalog() -> None:
        if catalog_path is None:
            logger.warning("no catalog path configured; reload ignored")
            return
        holder.swap(load_catalog(catalog_path, hours_tz=hours_tz))
        logger.info("catalog reloaded from %s", catalog_path)

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        try:
            signal.signal(signal.SIGHUP, lambda *_: reload_catalog())
        except ValueError:
            pass  # not in the main thread (e.g. test client); skip the hook
        yield

    app = FastAPI(title="sodium-scout", lifespan=lifespan)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.holder = holder
    app.state.reload_catalog = reload_catalog

    @app.get("/health")
    async def health() -> Response:
        snapshot = holder.get()
        return _json_response(
            {
                "status": "ok",
                "catalog_version": snapshot.fingerprint,
                "built_at": snapshot.built_at.isoformat(),
                "restaurants": len(snapshot.restaurants),
                "items": len(snapshot.items),
            }
        )

    @app.get("/items")
    async def items(request: Request) -> Response:
        try:
            params = request.query_params
            try:
                limit = int(params.get("limit", DEFAULT_ITEMS_LIMIT))
                offset = int(params.get("offset", 0))
            except ValueError as exc:
                raise MalformedRequest("limit and offset must be integers") from exc
            if limit < 0 or offset < 0:
                raise ValueError("limit and offset must be non-negative")
            limit = min(limit, MAX_ITEMS_LIMIT)
            snapshot = holder.get()
            window = snapshot.items_sorted()[offset : offset + limit]
            return _json_response(
                {
                    "total": len(snapshot.items),
                    "offset": offset,
                    "limit": limit,
                    "items": [wire.wire_item(item) for item in window],
                    "catalog_version": snapshot.fingerprint,
                }
            )
        except Exception as exc:  # noqa: BLE001
            return _map_exception(exc)

    @app.post("/sodium-need")
    async def sodium_need_route(request: Request) -> Response:
        try:
            payload = await _read_json(request)
            profile = wire.parse_profile(wire.require_field(payload, "profile", "request"))
            scenario = wire.parse_scenario(
                wire.require_field(payload, "scenario", "request")
            )
            return _json_response(wire.wire_sodium_need(sodium_need(profile, scenario)))
        except Exception as exc:  # noqa: BLE001
            return _map_exception(exc)

    @app.post("/recommend")
    async def recommend_route(request: Request) -> Response:
        try:
            payload = await _read_json(request)
            req = parse_recommend_request(payload)
            response = recommend(req, holder.get())
            return _json_response(wire_response(response))
        except Exception as exc:  # noqa: BLE001
            return _map_exception(exc)

    return app


def serve(
    catalog_file: str | Path,
    bind_address: str = "127.0.0.1:8000",
    hours_tz: tzinfo = timezone.utc,
) -> None:
    """Load the catalog and serve until interrupted; SIGHUP reloads it."""
    import uvicorn

    app = create_app(catalog_path=catalog_file, hours_tz=hours_tz)
    host, _, port_text = bind_address.rpartition(":")
    if not host or not port_text.isdigit():
        raise ValueError(f"bind address must be host:port, got {bind_address!r}")
    uvicorn.run(app, host=host, port=int(port_text), log_level="info")
