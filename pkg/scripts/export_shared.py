#!/usr/bin/env python3
"""Regenerate the shared artifacts consumed by the dashboard.

The dashboard duplicates the scoring policy client-side; these files are
the drift barrier between the two implementations:

  shared/policy.json              threshold table (policy_document())
  shared/score_vectors.json       payload -> expected ScoreCard vectors
  frontend/src/policy.ts          policy.json as a typed TS constant
  frontend/public/demo_payloads.json  API-shaped payload list for demo mode

Vectors come from the standard generated corpus (n=50, seed=7) plus the
worked example snapshot, imported into a throwaway catalog so payloads
are byte-identical to what the HTTP API serves. Regeneration is a pure
function of the package source; the test suite asserts freshness.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import tempfile
from pathlib import Path

from daogauge.api import CatalogStore
from daogauge.catalog import RunCatalog
from daogauge.fixtures import EXAMPLE_SNAPSHOT, write_corpus
from daogauge.policy import policy_document
from daogauge.scoring import score_dao

CORPUS_N = 50
CORPUS_SEED = 7


def build_vectors() -> list[dict]:
    with tempfile.TemporaryDirectory() as tmp:
        tmp_path = Path(tmp)
        data_dir = tmp_path / "data"
        write_corpus(data_dir, n=CORPUS_N, seed=CORPUS_SEED)
        catalog = RunCatalog(tmp_path / "catalog")
        summary = catalog.import_directory(data_dir)
        if not summary.ok or summary.imported != CORPUS_N:
            raise RuntimeError(f"corpus import failed: {summary}")

        example_path = tmp_path / "example.json"
        example_path.write_text(
            json.dumps(EXAMPLE_SNAPSHOT, indent=2) + "\n", encoding="utf-8"
        )
        outcome = catalog.import_file(example_path)
        if outcome.status != "imported":
            raise RuntimeError(f"example import failed: {outcome}")

        store = CatalogStore(catalog)
        vectors = []
        for entry in store.dao_listing():
            dao_id = entry["dao_id"]
            payload = store.payload(dao_id)
            card = score_dao(catalog.latest_snapshot_by_id(dao_id))
            vectors.append({"payload": payload, "expected": dataclasses.asdict(card)})
        return vectors


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}")


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _policy_ts(doc: dict) -> str:
    return (
        "// Generated by scripts/export_shared.py -- do not edit by hand.\n"
        "// Threshold policy shared with the scoring engine.\n"
        f"export const POLICY = {json.dumps(doc, indent=2)} as const;\n"
        "\n"
        "export type Policy = typeof POLICY;\n"
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--out-root",
        type=Path,
        default=Path(__file__).resolve().parents[1],
        help="repository root to write under (default: this repo)",
    )
    args = parser.parse_args()
    root = args.out_root

    policy = policy_document()
    vectors = build_vectors()
    bundle = {
        "policy_version": policy["policy_version"],
        "corpus": {"n": CORPUS_N, "seed": CORPUS_SEED, "extra": ["example snapshot"]},
        "vectors": vectors,
    }

    _write(root / "shared" / "policy.json", _json_text(policy))
    _write(root / "shared" / "score_vectors.json", _json_text(bundle))
    _write(root / "frontend" / "src" / "policy.ts", _policy_ts(policy))
    _write(
        root / "frontend" / "public" / "demo_payloads.json",
        _json_text([v["payload"] for v in vectors]),
    )


if __name__ == "__main__":
    main()
