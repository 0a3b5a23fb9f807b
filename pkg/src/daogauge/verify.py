"""Serving-fidelity checker.

For every snapshot file in a data directory: fetch the corresponding API
payload, compare the stored block structure field by field against the
source file, then re-run the scoring engine on both sides and compare the
cards. Integers must match exactly, floats within relative 1e-9 (JSON
round-trips can perturb the last bit).
"""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Protocol

from .scoring import score_dao
from .snapshot import CANONICAL_BLOCKS, DaoSnapshot, parse_snapshot, parse_snapshot_file

FLOAT_REL_TOL = 1e-9


class HttpClient(Protocol):
    """The slice of an httpx-style client we rely on."""

    def get(self, url: str, params: Mapping[str, Any] | None = None) -> Any: ...


@dataclass
class DaoCheck:
    dao_name: str
    source_path: str
    field_mismatches: list[str] = field(default_factory=list)
    score_mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.field_mismatches and not self.score_mismatches


@dataclass
class VerifyReport:
    checks: list[DaoCheck] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.errors and all(c.ok for c in self.checks)


def _numbers_match(a: float, b: float) -> bool:
    if isinstance(a, bool) or isinstance(b, bool):
        return a is b
    if isinstance(a, int) and isinstance(b, int):
        return a == b
    return math.isclose(a, b, rel_tol=FLOAT_REL_TOL, abs_tol=0.0) or a == b


def _compare(path: str, a: Any, b: Any, out: list[str]) -> None:
    if isinstance(a, Mapping) and isinstance(b, Mapping):
        for key in sorted(set(a) | set(b)):
            where = f"{path}.{key}" if path else key
            if key not in a:
                out.append(f"{where}: unexpected field in payload")
            elif key not in b:
                out.append(f"{where}: missing from payload")
            else:
                _compare(where, a[key], b[key], out)
        return
    if isinstance(a, list) and isinstance(b, list):
        if len(a) != len(b):
            out.append(f"{path}: length {len(a)} != {len(b)}")
            return
        for i, (x, y) in enumerate(zip(a, b)):
            _compare(f"{path}[{i}]", x, y, out)
        return
    if isinstance(a, (int, float)) and isinstance(b, (int, float)):
        if not _numbers_match(a, b):
            out.append(f"{path}: {a!r} != {b!r}")
        return
    if type(a) is not type(b) or a != b:
        out.append(f"{path}: {a!r} != {b!r}")


def payload_to_snapshot(payload: Mapping[str, Any]) -> DaoSnapshot:
    """Rebuild a snapshot document from an API payload and parse it.

    Absent blocks arrive as {} by contract; they are dropped so the
    reparse treats them as absent, same as the source side.
    """
    doc: dict[str, Any] = {"dao_name": payload.get("dao_name")}
    if payload.get("chain_id") is not None:
        doc["chain_id"] = payload["chain_id"]
    if payload.get("timestamp") is not None:
        doc["timestamp"] = payload["timestamp"]
    for name in CANONICAL_BLOCKS:
        block = payload.get(name)
        if block:
            doc[name] = block
    result = parse_snapshot(doc)
    if result.snapshot is None:
        raise ValueError("payload did not reparse as a snapshot")
    return result.snapshot


def _check_one(
    snapshot: DaoSnapshot, payload: Mapping[str, Any], source_path: str
) -> DaoCheck:
    check = DaoCheck(dao_name=snapshot.dao_name.strip(), source_path=source_path)

    if payload.get("dao_name") != snapshot.dao_name.strip():
        check.field_mismatches.append(
            f"dao_name: {snapshot.dao_name.strip()!r} != {payload.get('dao_name')!r}"
        )
    if payload.get("chain_id") != snapshot.chain_id:
        check.field_mismatches.append(
            f"chain_id: {snapshot.chain_id!r} != {payload.get('chain_id')!r}"
        )
    if payload.get("timestamp") != snapshot.timestamp:
        check.field_mismatches.append(
            f"timestamp: {snapshot.timestamp!r} != {payload.get('timestamp')!r}"
        )

    for name in CANONICAL_BLOCKS:
        expected = snapshot.raw_blocks.get(name, {})
        got = payload.get(name)
        if not isinstance(got, Mapping):
            check.field_mismatches.append(f"{name}: payload block is {type(got).__name__}")
            continue
        _compare(name, expected, got, check.field_mismatches)

    try:
        served = payload_to_snapshot(payload)
    except ValueError as exc:
        check.score_mismatches.append(f"payload reparse failed: {exc}")
        return check

    want = score_dao(snapshot)
    got_card = score_dao(served)
    if want != got_card:
        for fld in dataclasses.fields(want):
            a = getattr(want, fld.name)
            b = getattr(got_card, fld.name)
            if a != b:
                check.score_mismatches.append(f"{fld.name}: {a!r} != {b!r}")
    return check


def fetch_dao_index(client: HttpClient) -> dict[tuple[str, int | None], int]:
    """Map (dao_name, chain_id) -> dao_id by walking the paginated listing."""
    index: dict[tuple[str, int | None], int] = {}
    page = 1
    while True:
        resp = client.get("/api/v1/daos", params={"page": page, "page_size": 200})
        if resp.status_code != 200:
            raise ConnectionError(f"/api/v1/daos page {page}: HTTP {resp.status_code}")
        body = resp.json()
        for item in body["items"]:
            index[(item["dao_name"], item.get("chain_id"))] = item["dao_id"]
        if page * body["page_size"] >= body["total"]:
            return index
        page += 1


def verify_directory(client: HttpClient, data_dir: str | Path) -> VerifyReport:
    report = VerifyReport()
    root = Path(data_dir)
    files = sorted(
        p for p in root.glob("*.json") if p.is_file() and not p.name.startswith(".")
    )
    try:
        index = fetch_dao_index(client)
    except Exception as exc:  # connectivity failures are reported, not raised
        report.errors.append(f"listing fetch failed: {exc}")
        return report

    for path in files:
        parsed, _ = parse_snapshot_file(path)
        if not parsed.ok or parsed.snapshot is None:
            report.errors.append(f"{path.name}: source file does not parse")
            continue
        snapshot = parsed.snapshot
        dao_id = index.get(snapshot.identity_key)
        if dao_id is None:
            report.errors.append(
                f"{path.name}: {snapshot.identity_key} not present in the API listing"
            )
            continue
        try:
            resp = client.get(f"/api/v1/daos/{dao_id}/enhanced_metrics")
        except Exception as exc:
            report.errors.append(f"{path.name}: fetch failed: {exc}")
            continue
        if resp.status_code != 200:
            report.errors.append(f"{path.name}: HTTP {resp.status_code}")
            continue
        report.checks.append(_check_one(snapshot, resp.json(), str(path)))
    return report
