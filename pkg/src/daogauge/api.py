"""Read-only v1 HTTP API over the run catalog or a demo bundle.

Every endpoint is a GET; nothing here mutates the catalog. Absent metric
blocks are served as {} so UI consumers never need null checks. Error
bodies are uniformly {"error": code, "detail": message}.
"""
from __future__ import annotations

import hashlib
import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Protocol

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from .catalog import RunCatalog, RunDaoMismatch, UnknownDao, UnknownRun
from .snapshot import CANONICAL_BLOCKS, DaoSnapshot, parse_snapshot

MAX_PAGE_SIZE = 200
MAX_MULTI_IDS = 200


class ApiError(Exception):
    def __init__(self, status_code: int, code: str, detail: str):
        super().__init__(detail)
        self.status_code = status_code
        self.code = code
        self.detail = detail


class Store(Protocol):
    """What the route handlers need from a backing store."""

    def dao_listing(self) -> list[dict]: ...

    def payload(self, dao_id: int, run_id: int | None = None) -> dict: ...

    def runs(self, dao_id: int) -> list[dict]: ...


def _payload_dict(
    dao_id: int,
    dao_name: str,
    chain_id: int | None,
    timestamp: str | None,
    blocks: dict[str, dict],
) -> dict:
    payload: dict[str, Any] = {
        "dao_id": dao_id,
        "dao_name": dao_name,
        "chain_id": chain_id,
        "timestamp": timestamp,
    }
    for name in CANONICAL_BLOCKS:
        payload[name] = blocks.get(name, {})
    return payload


class CatalogStore:
    def __init__(self, catalog: RunCatalog):
        self.catalog = catalog

    def dao_listing(self) -> list[dict]:
        state = self.catalog.state
        listing = []
        for entry in sorted(state.daos, key=lambda e: e.dao_id):
            run_ids = state.runs_by_dao.get(entry.dao_id, ())
            latest = state.runs_by_id[run_ids[-1]] if run_ids else None
            listing.append(
                {
                    "dao_id": entry.dao_id,
                    "dao_name": entry.dao_name,
                    "chain_id": entry.chain_id,
                    "timestamp": latest.timestamp if latest else None,
                }
            )
        return listing

    def payload(self, dao_id: int, run_id: int | None = None) -> dict:
        state = self.catalog.state
        run_ids = state.runs_by_dao.get(dao_id)
        if not run_ids:
            raise ApiError(404, "unknown_dao", f"no dao with id {dao_id}")
        if run_id is None:
            run = state.runs_by_id[run_ids[-1]]
        else:
            run = state.runs_by_id.get(run_id)
            if run is None or run.dao_id != dao_id:
                raise ApiError(404, "unknown_run", f"no run {run_id} for dao {dao_id}")
        blocks = self.catalog.raw_blocks_for_run(run)
        return _payload_dict(dao_id, run.dao_name, run.chain_id, run.timestamp, blocks)

    def runs(self, dao_id: int) -> list[dict]:
        try:
            runs = self.catalog.runs_for_dao(dao_id)
        except UnknownDao:
            raise ApiError(404, "unknown_dao", f"no dao with id {dao_id}")
        return [
            {
                "run_id": r.run_id,
                "created_at": r.created_at,
                "source_path": r.source_path,
                "content_digest": r.content_digest,
            }
            for r in runs
        ]


class DemoStore:
    """Serves the same surface from a static bundle of snapshot documents.

    The bundle is a JSON array of snapshot documents (the same format as
    the data-directory files). Each DAO gets one synthetic run.
    """

    def __init__(self, bundle_path: str | Path):
        path = Path(bundle_path)
        try:
            raw = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ValueError(f"{path}: unreadable bundle: {exc}") from exc
        try:
            docs = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: bundle is not valid JSON: {exc}") from exc
        if not isinstance(docs, list):
            raise ValueError(f"{path}: bundle must be a JSON array of snapshots")

        self.source = str(path)
        self.loaded_at = datetime.now(timezone.utc).isoformat()
        self._snapshots: list[DaoSnapshot] = []
        self._digests: list[str] = []
        for i, doc in enumerate(docs):
            if not isinstance(doc, dict):
                raise ValueError(f"{path}[{i}]: snapshot must be a JSON object")
            result = parse_snapshot(doc)
            if not result.ok or result.snapshot is None:
                messages = "; ".join(
                    f"{issue.field_path}: {issue.message}"
                    for issue in result.report.errors
                )
                raise ValueError(f"{path}[{i}]: rejected snapshot: {messages}")
            self._snapshots.append(result.snapshot)
            canonical = json.dumps(
                doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False
            ).encode("utf-8")
            self._digests.append(f"sha256:{hashlib.sha256(canonical).hexdigest()}")

    def dao_listing(self) -> list[dict]:
        return [
            {
                "dao_id": i + 1,
                "dao_name": snap.dao_name.strip(),
                "chain_id": snap.chain_id,
                "timestamp": snap.timestamp,
            }
            for i, snap in enumerate(self._snapshots)
        ]

    def _snapshot(self, dao_id: int) -> DaoSnapshot:
        if not 1 <= dao_id <= len(self._snapshots):
            raise ApiError(404, "unknown_dao", f"no dao with id {dao_id}")
        return self._snapshots[dao_id - 1]

    def payload(self, dao_id: int, run_id: int | None = None) -> dict:
        snap = self._snapshot(dao_id)
        if run_id is not None and run_id != dao_id:
            raise ApiError(404, "unknown_run", f"no run {run_id} for dao {dao_id}")
        return _payload_dict(
            dao_id, snap.dao_name.strip(), snap.chain_id, snap.timestamp, snap.raw_blocks
        )

    def runs(self, dao_id: int) -> list[dict]:
        self._snapshot(dao_id)
        return [
            {
                "run_id": dao_id,
                "created_at": self.loaded_at,
                "source_path": f"{self.source}#{dao_id - 1}",
                "content_digest": self._digests[dao_id - 1],
            }
        ]


def create_app(store: Store) -> FastAPI:
    app = FastAPI(title="daogauge", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def _api_error(request: Request, exc: ApiError) -> JSONResponse:
        return JSONResponse(
            {"error": exc.code, "detail": exc.detail}, status_code=exc.status_code
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(
        request: Request, exc: RequestValidationError
    ) -> JSONResponse:
        return JSONResponse(
            {"error": "invalid_request", "detail": str(exc.errors())}, status_code=422
        )

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(
        request: Request, exc: StarletteHTTPException
    ) -> JSONResponse:
        codes = {404: "not_found", 405: "method_not_allowed"}
        code = codes.get(exc.status_code, "http_error")
        return JSONResponse(
            {"error": code, "detail": str(exc.detail)}, status_code=exc.status_code
        )

    @app.get("/api/v1/daos")
    def list_daos(
        page: int = Query(1, ge=1),
        page_size: int = Query(50, ge=1, le=MAX_PAGE_SIZE),
    ) -> dict:
        listing = store.dao_listing()
        start = (page - 1) * page_size
        return {
            "items": listing[start : start + page_size],
            "total": len(listing),
            "page": page,
            "page_size": page_size,
        }

    # Declared before the {dao_id} routes so the literal path wins.
    @app.get("/api/v1/daos/metrics/multi")
    def multi_metrics(dao_ids: str = Query(...)) -> list[dict]:
        parts = [p.strip() for p in dao_ids.split(",")]
        if any(not p for p in parts):
            raise ApiError(422, "invalid_request", "dao_ids has empty entries")
        try:
            ids = [int(p) for p in parts]
        except ValueError:
            raise ApiError(422, "invalid_request", "dao_ids must be comma-separated integers")
        if not 1 <= len(ids) <= MAX_MULTI_IDS:
            raise ApiError(
                422, "invalid_request", f"dao_ids must list 1..{MAX_MULTI_IDS} ids"
            )
        out = []
        for dao_id in ids:
            try:
                out.append(store.payload(dao_id))
            except ApiError:
                out.append({"dao_id": dao_id, "error": "unknown"})
        return out

    @app.get("/api/v1/daos/{dao_id}/enhanced_metrics")
    def enhanced_metrics(dao_id: int, run_id: int | None = Query(None)) -> dict:
        return store.payload(dao_id, run_id)

    @app.get("/api/v1/daos/{dao_id}/runs")
    def dao_runs(dao_id: int) -> list[dict]:
        return store.runs(dao_id)

    return app


def create_catalog_app(catalog_dir: str | Path) -> FastAPI:
    return create_app(CatalogStore(RunCatalog(catalog_dir)))


def create_demo_app(bundle_path: str | Path) -> FastAPI:
    return create_app(DemoStore(bundle_path))
