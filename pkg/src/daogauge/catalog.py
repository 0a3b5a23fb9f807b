"""Append-only run catalog backing the ingestion pipeline.

Storage layout under the catalog directory:

    log            one JSON record per line; first line is a version
                   header, then dao records and run records
    blobs/<hex>    content-addressed block payloads (canonical JSON)

A run record is the commit point: blobs are written first, the record
line last, so a torn write at the tail of the log leaves the previous
state intact and replay simply drops the partial line. All mutation goes
through a single writer lock (in-process mutex plus a file lock for
cross-process exclusion); readers work off an immutable state object
that is swapped atomically after each commit.
"""
from __future__ import annotations

import copy
import hashlib
import json
import os
import threading
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable, Mapping

from filelock import FileLock

from .snapshot import (
    CANONICAL_BLOCKS,
    DaoSnapshot,
    ParseResult,
    ValidationIssue,
    ValidationReport,
    parse_snapshot,
    parse_snapshot_file,
)

CATALOG_VERSION = 1


class CatalogError(Exception):
    pass


class DirectoryUnreadable(CatalogError):
    pass


class UnknownDao(CatalogError):
    pass


class UnknownRun(CatalogError):
    pass


class RunDaoMismatch(CatalogError):
    pass


class ValidationError(CatalogError):
    """Raised by replace_snapshot when the new file is rejected."""

    def __init__(self, message: str, report: ValidationReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class DaoEntry:
    dao_id: int
    dao_name: str
    chain_id: int | None


@dataclass(frozen=True)
class MetricRun:
    run_id: int
    dao_id: int
    dao_name: str
    created_at: str
    source_path: str
    content_digest: str
    timestamp: str | None
    chain_id: int | None
    blocks: Mapping[str, str]  # block name -> blob digest (hex)


@dataclass(frozen=True)
class MetricSnapshot:
    run_id: int
    block_name: str
    payload: dict


@dataclass(frozen=True)
class _State:
    daos: tuple[DaoEntry, ...] = ()
    dao_by_key: Mapping[tuple[str, int | None], int] = field(default_factory=dict)
    runs_by_id: Mapping[int, MetricRun] = field(default_factory=dict)
    runs_by_dao: Mapping[int, tuple[int, ...]] = field(default_factory=dict)
    next_dao_id: int = 1
    next_run_id: int = 1


@dataclass
class FileOutcome:
    path: str
    status: str  # imported | skipped-identical | rejected
    dao_name: str | None
    run_id: int | None
    report: ValidationReport


@dataclass
class ImportSummary:
    outcomes: list[FileOutcome] = field(default_factory=list)

    @property
    def imported(self) -> int:
        return sum(1 for o in self.outcomes if o.status == "imported")

    @property
    def skipped(self) -> int:
        return sum(1 for o in self.outcomes if o.status == "skipped-identical")

    @property
    def rejected(self) -> int:
        return sum(1 for o in self.outcomes if o.status == "rejected")

    @property
    def ok(self) -> bool:
        return self.rejected == 0

    def aggregate_report(self) -> ValidationReport:
        merged = ValidationReport()
        for outcome in self.outcomes:
            name = Path(outcome.path).name
            merged.extend(
                ValidationIssue(i.severity, f"{name}:{i.field_path}", i.message)
                for i in outcome.report.issues
            )
        return merged


def _canonical_bytes(payload: Mapping[str, Any]) -> bytes:
    return json.dumps(
        payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False
    ).encode("utf-8")


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


class RunCatalog:
    """Single-writer, many-reader catalog over one directory."""

    def __init__(self, catalog_dir: str | Path):
        self.root = Path(catalog_dir)
        self.log_path = self.root / "log"
        self.blob_dir = self.root / "blobs"
        self._mutex = threading.Lock()
        self._file_lock = FileLock(str(self.root / "lock"))
        self._ensure_layout()
        self._state = self._replay()

    # -- storage plumbing ------------------------------------------------

    def _ensure_layout(self) -> None:
        self.blob_dir.mkdir(parents=True, exist_ok=True)
        if not self.log_path.exists():
            header = json.dumps({"catalog_version": CATALOG_VERSION}) + "\n"
            self.log_path.write_text(header, encoding="utf-8")

    def _replay(self) -> _State:
        lines = self.log_path.read_text(encoding="utf-8").splitlines()
        if not lines:
            raise CatalogError(f"{self.log_path}: empty catalog log")
        try:
            header = json.loads(lines[0])
        except json.JSONDecodeError as exc:
            raise CatalogError(f"{self.log_path}: bad header line: {exc}") from exc
        if not isinstance(header, dict) or header.get("catalog_version") != CATALOG_VERSION:
            raise CatalogError(
                f"{self.log_path}: unsupported catalog version {header!r}"
            )

        state = _State()
        for idx, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                if idx == len(lines):  # torn tail write; previous commit stands
                    break
                raise CatalogError(f"{self.log_path}:{idx}: corrupt record") from exc
            state = self._apply(state, record)
        return state

    @staticmethod
    def _apply(state: _State, record: Mapping[str, Any]) -> _State:
        kind = record.get("type")
        if kind == "dao":
            entry = DaoEntry(
                dao_id=record["dao_id"],
                dao_name=record["dao_name"],
                chain_id=record.get("chain_id"),
            )
            dao_by_key = dict(state.dao_by_key)
            dao_by_key[(entry.dao_name, entry.chain_id)] = entry.dao_id
            return replace(
                state,
                daos=state.daos + (entry,),
                dao_by_key=dao_by_key,
                next_dao_id=max(state.next_dao_id, entry.dao_id + 1),
            )
        if kind == "run":
            run = MetricRun(
                run_id=record["run_id"],
                dao_id=record["dao_id"],
                dao_name=record["dao_name"],
                created_at=record["created_at"],
                source_path=record["source_path"],
                content_digest=record["content_digest"],
                timestamp=record.get("timestamp"),
                chain_id=record.get("chain_id"),
                blocks=dict(record.get("blocks", {})),
            )
            runs_by_id = dict(state.runs_by_id)
            runs_by_id[run.run_id] = run
            runs_by_dao = dict(state.runs_by_dao)
            runs_by_dao[run.dao_id] = runs_by_dao.get(run.dao_id, ()) + (run.run_id,)
            return replace(
                state,
                runs_by_id=runs_by_id,
                runs_by_dao=runs_by_dao,
                next_run_id=max(state.next_run_id, run.run_id + 1),
            )
        raise CatalogError(f"unknown log record type {kind!r}")

    def _append_records(self, records: Iterable[Mapping[str, Any]]) -> None:
        with open(self.log_path, "a", encoding="utf-8") as fh:
            for record in records:
                fh.write(json.dumps(record, ensure_ascii=False) + "\n")
            fh.flush()
            os.fsync(fh.fileno())

    def _write_blob(self, payload: Mapping[str, Any]) -> str:
        data = _canonical_bytes(payload)
        digest = _digest(data)
        path = self.blob_dir / digest
        if not path.exists():
            tmp = path.with_name(f".{digest}.tmp")
            tmp.write_bytes(data)
            tmp.replace(path)
        return digest

    def _read_blob(self, digest: str) -> dict:
        path = self.blob_dir / digest
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError as exc:
            raise CatalogError(f"missing blob {digest}") from exc

    # -- write side ------------------------------------------------------

    def _commit_parsed(
        self, parsed: ParseResult, raw: bytes, source_path: str
    ) -> FileOutcome:
        """Commit one successfully parsed snapshot. Caller checked parse.ok."""
        snapshot = parsed.snapshot
        assert snapshot is not None
        content_digest = f"sha256:{_digest(raw)}"

        with self._mutex, self._file_lock:
            state = self._state
            key = snapshot.identity_key
            dao_id = state.dao_by_key.get(key)
            records: list[dict] = []
            if dao_id is None:
                dao_id = state.next_dao_id
                records.append(
                    {
                        "type": "dao",
                        "dao_id": dao_id,
                        "dao_name": key[0],
                        "chain_id": key[1],
                    }
                )
            else:
                run_ids = state.runs_by_dao.get(dao_id, ())
                if run_ids:
                    latest = state.runs_by_id[run_ids[-1]]
                    if latest.content_digest == content_digest:
                        return FileOutcome(
                            path=source_path,
                            status="skipped-identical",
                            dao_name=key[0],
                            run_id=latest.run_id,
                            report=parsed.report,
                        )

            blocks = {
                name: self._write_blob(payload)
                for name, payload in snapshot.raw_blocks.items()
            }
            run_id = state.next_run_id
            created_at = datetime.now(timezone.utc).isoformat()
            records.append(
                {
                    "type": "run",
                    "run_id": run_id,
                    "dao_id": dao_id,
                    "dao_name": key[0],
                    "created_at": created_at,
                    "source_path": source_path,
                    "content_digest": content_digest,
                    "timestamp": snapshot.timestamp,
                    "chain_id": key[1],
                    "blocks": blocks,
                }
            )
            self._append_records(records)
            new_state = state
            for record in records:
                new_state = self._apply(new_state, record)
            self._state = new_state

        return FileOutcome(
            path=source_path,
            status="imported",
            dao_name=key[0],
            run_id=run_id,
            report=parsed.report,
        )

    def import_file(self, path: str | Path) -> FileOutcome:
        parsed, raw = parse_snapshot_file(path)
        if not parsed.ok:
            return FileOutcome(
                path=str(path),
                status="rejected",
                dao_name=parsed.snapshot.dao_name if parsed.snapshot else None,
                run_id=None,
                report=parsed.report,
            )
        return self._commit_parsed(parsed, raw, str(path))

    def import_directory(self, data_dir: str | Path) -> ImportSummary:
        root = Path(data_dir)
        if not root.is_dir():
            raise DirectoryUnreadable(f"{root}: not a readable directory")
        try:
            files = [
                p for p in root.glob("*.json")
                if p.is_file() and not p.name.startswith(".")
            ]
        except OSError as exc:
            raise DirectoryUnreadable(f"{root}: {exc}") from exc

        # Import order: snapshot timestamp first, filename as tiebreaker,
        # so multiple files for one DAO land oldest-first.
        staged: list[tuple[str, str, Path, ParseResult, bytes]] = []
        for path in files:
            try:
                parsed, raw = parse_snapshot_file(path)
            except OSError as exc:
                report = ValidationReport()
                report.add_error("$file", f"unreadable: {exc}")
                parsed, raw = ParseResult(None, report), b""
            ts = ""
            if parsed.snapshot is not None and parsed.snapshot.timestamp:
                ts = parsed.snapshot.timestamp
            staged.append((ts, path.name, path, parsed, raw))
        staged.sort(key=lambda item: (item[0], item[1]))

        summary = ImportSummary()
        for _, _, path, parsed, raw in staged:
            if not parsed.ok:
                summary.outcomes.append(
                    FileOutcome(
                        str(path),
                        "rejected",
                        parsed.snapshot.dao_name if parsed.snapshot else None,
                        None,
                        parsed.report,
                    )
                )
            else:
                summary.outcomes.append(self._commit_parsed(parsed, raw, str(path)))
        return summary

    def replace_snapshot(self, dao_name: str, path: str | Path) -> int:
        """Atomically point a DAO at a new snapshot file.

        Readers see either the old run or the new one, never a mixture.
        Byte-identical content is a no-op returning the current run id.
        """
        try:
            parsed, raw = parse_snapshot_file(path)
        except OSError as exc:
            raise ValidationError(f"{path}: unreadable: {exc}") from exc
        if not parsed.ok:
            raise ValidationError(f"{path}: rejected", parsed.report)
        snapshot = parsed.snapshot
        assert snapshot is not None
        if snapshot.dao_name.strip() != dao_name.strip():
            raise ValidationError(
                f"{path}: file is for {snapshot.dao_name!r}, not {dao_name!r}"
            )
        outcome = self._commit_parsed(parsed, raw, str(path))
        assert outcome.run_id is not None
        return outcome.run_id

    # -- read side -------------------------------------------------------

    @property
    def state(self) -> _State:
        return self._state

    def daos(self) -> tuple[DaoEntry, ...]:
        return self._state.daos

    def _resolve_dao(self, dao_name: str, state: _State) -> int:
        wanted = dao_name.strip()
        for entry in state.daos:
            if entry.dao_name == wanted:
                return entry.dao_id
        raise UnknownDao(dao_name)

    def _latest_run(self, dao_id: int, state: _State) -> MetricRun:
        run_ids = state.runs_by_dao.get(dao_id, ())
        if not run_ids:
            raise UnknownDao(f"dao_id {dao_id}")
        return state.runs_by_id[run_ids[-1]]

    def _assemble(self, run: MetricRun) -> DaoSnapshot:
        doc: dict[str, Any] = {"dao_name": run.dao_name}
        if run.chain_id is not None:
            doc["chain_id"] = run.chain_id
        if run.timestamp is not None:
            doc["timestamp"] = run.timestamp
        raw_blocks = {
            name: self._read_blob(digest) for name, digest in run.blocks.items()
        }
        for name in CANONICAL_BLOCKS:
            if name in raw_blocks:
                doc[name] = raw_blocks[name]
        result = parse_snapshot(doc)
        if result.snapshot is None:
            raise CatalogError(f"run {run.run_id}: stored payload failed to parse")
        return result.snapshot

    def latest_snapshot(self, dao_name: str) -> DaoSnapshot:
        state = self._state
        dao_id = self._resolve_dao(dao_name, state)
        return self._assemble(self._latest_run(dao_id, state))

    def latest_snapshot_by_id(self, dao_id: int) -> DaoSnapshot:
        state = self._state
        if dao_id not in state.runs_by_dao:
            raise UnknownDao(f"dao_id {dao_id}")
        return self._assemble(self._latest_run(dao_id, state))

    def run_scoped_snapshot(self, dao_name: str, run_id: int) -> DaoSnapshot:
        state = self._state
        dao_id = self._resolve_dao(dao_name, state)
        run = state.runs_by_id.get(run_id)
        if run is None:
            raise UnknownRun(f"run_id {run_id}")
        if run.dao_id != dao_id:
            raise RunDaoMismatch(f"run {run_id} belongs to dao_id {run.dao_id}")
        return self._assemble(run)

    def snapshot_for_run(self, dao_id: int, run_id: int) -> DaoSnapshot:
        state = self._state
        run = state.runs_by_id.get(run_id)
        if run is None:
            raise UnknownRun(f"run_id {run_id}")
        if run.dao_id != dao_id:
            raise RunDaoMismatch(f"run {run_id} belongs to dao_id {run.dao_id}")
        return self._assemble(run)

    def runs_for_dao(self, dao_id: int) -> tuple[MetricRun, ...]:
        """Runs newest-first, as served by the runs endpoint."""
        state = self._state
        if dao_id not in state.runs_by_dao:
            raise UnknownDao(f"dao_id {dao_id}")
        run_ids = state.runs_by_dao[dao_id]
        return tuple(state.runs_by_id[rid] for rid in reversed(run_ids))

    def snapshots_for_run(self, run_id: int) -> tuple[MetricSnapshot, ...]:
        state = self._state
        run = state.runs_by_id.get(run_id)
        if run is None:
            raise UnknownRun(f"run_id {run_id}")
        return tuple(
            MetricSnapshot(run_id, name, self._read_blob(digest))
            for name, digest in run.blocks.items()
        )

    def raw_blocks_for_run(self, run: MetricRun) -> dict[str, dict]:
        return {
            name: copy.deepcopy(self._read_blob(digest))
            for name, digest in run.blocks.items()
        }
