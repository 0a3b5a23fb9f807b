from __future__ import annotations

import copy
import json
from pathlib import Path

import pytest

from conftest import write_doc
from daogauge.catalog import (
    CatalogError,
    DirectoryUnreadable,
    RunCatalog,
    RunDaoMismatch,
    UnknownDao,
    UnknownRun,
    ValidationError,
)
from daogauge.snapshot import parse_snapshot


@pytest.fixture
def catalog(tmp_path: Path) -> RunCatalog:
    return RunCatalog(tmp_path / "cat")


def test_import_listing_creates_one_run(catalog, tmp_path, uniswap_doc):
    data = tmp_path / "data"
    data.mkdir()
    write_doc(data / "uniswap.json", uniswap_doc)

    summary = catalog.import_directory(data)
    assert summary.imported == 1 and summary.rejected == 0
    assert summary.ok

    run = catalog.runs_for_dao(1)[0]
    assert run.dao_name == "Uniswap"
    assert run.content_digest.startswith("sha256:")
    assert run.source_path.endswith("uniswap.json")
    # four blocks stored; the optional health block was absent
    assert sorted(run.blocks) == [
        "accumulated_funds", "decentralisation",
        "network_participation", "voting_efficiency",
    ]
    snaps = catalog.snapshots_for_run(run.run_id)
    assert {s.block_name for s in snaps} == set(run.blocks)


def test_double_import_is_idempotent(catalog, tmp_path, uniswap_doc):
    data = tmp_path / "data"
    data.mkdir()
    write_doc(data / "uniswap.json", uniswap_doc)

    first = catalog.import_directory(data)
    second = catalog.import_directory(data)
    assert first.imported == 1
    assert second.imported == 0 and second.skipped == 1
    assert len(catalog.runs_for_dao(1)) == 1


def test_rejection_isolated_from_valid_files(catalog, tmp_path, uniswap_doc):
    data = tmp_path / "data"
    data.mkdir()
    write_doc(data / "good.json", uniswap_doc)
    (data / "bad.json").write_text("{not json", encoding="utf-8")

    summary = catalog.import_directory(data)
    assert summary.imported == 1 and summary.rejected == 1
    assert not summary.ok
    rejected = [o for o in summary.outcomes if o.status == "rejected"]
    assert rejected[0].path.endswith("bad.json")
    agg = summary.aggregate_report()
    assert any("bad.json" in i.field_path for i in agg.errors)


def test_unreadable_directory(catalog, tmp_path):
    with pytest.raises(DirectoryUnreadable):
        catalog.import_directory(tmp_path / "nope")


def test_latest_snapshot_roundtrip(catalog, tmp_path, uniswap_doc):
    data = tmp_path / "data"
    data.mkdir()
    write_doc(data / "uniswap.json", uniswap_doc)
    catalog.import_directory(data)

    source = parse_snapshot(uniswap_doc).snapshot
    served = catalog.latest_snapshot("Uniswap")
    assert served == source
    assert catalog.latest_snapshot_by_id(1) == source


def test_unknown_dao(catalog):
    with pytest.raises(UnknownDao):
        catalog.latest_snapshot("Ghost")
    with pytest.raises(UnknownDao):
        catalog.runs_for_dao(99)


def test_run_scoped_reads(catalog, tmp_path, uniswap_doc):
    v1 = write_doc(tmp_path / "v1.json", uniswap_doc)
    run1 = catalog.replace_snapshot("Uniswap", v1)

    v2_doc = copy.deepcopy(uniswap_doc)
    v2_doc["accumulated_funds"]["treasury_value_usd"] = 9.9e9
    v2 = write_doc(tmp_path / "v2.json", v2_doc)
    run2 = catalog.replace_snapshot("Uniswap", v2)

    assert run2 > run1
    old = catalog.run_scoped_snapshot("Uniswap", run1)
    new = catalog.run_scoped_snapshot("Uniswap", run2)
    assert old.accumulated_funds.treasury_value_usd == 2087864000.0
    assert new.accumulated_funds.treasury_value_usd == 9.9e9
    assert catalog.latest_snapshot("Uniswap") == new

    runs = catalog.runs_for_dao(1)
    assert [r.run_id for r in runs] == [run2, run1]  # newest first

    with pytest.raises(UnknownRun):
        catalog.run_scoped_snapshot("Uniswap", 999)


def test_run_dao_mismatch(catalog, tmp_path, uniswap_doc):
    other = copy.deepcopy(uniswap_doc)
    other["dao_name"] = "Compound"
    r1 = catalog.replace_snapshot("Uniswap", write_doc(tmp_path / "a.json", uniswap_doc))
    catalog.replace_snapshot("Compound", write_doc(tmp_path / "b.json", other))

    with pytest.raises(RunDaoMismatch):
        catalog.run_scoped_snapshot("Compound", r1)


def test_replace_rejects_bad_file_and_keeps_serving(catalog, tmp_path, uniswap_doc):
    good = write_doc(tmp_path / "good.json", uniswap_doc)
    catalog.replace_snapshot("Uniswap", good)

    bad = tmp_path / "bad.json"
    bad.write_text("{oops", encoding="utf-8")
    with pytest.raises(ValidationError):
        catalog.replace_snapshot("Uniswap", bad)
    assert catalog.latest_snapshot("Uniswap").accumulated_funds.treasury_value_usd == 2087864000.0

    wrong_dao = copy.deepcopy(uniswap_doc)
    wrong_dao["dao_name"] = "Compound"
    with pytest.raises(ValidationError):
        catalog.replace_snapshot("Uniswap", write_doc(tmp_path / "w.json", wrong_dao))


def test_replace_identical_bytes_is_noop(catalog, tmp_path, uniswap_doc):
    path = write_doc(tmp_path / "u.json", uniswap_doc)
    r1 = catalog.replace_snapshot("Uniswap", path)
    r2 = catalog.replace_snapshot("Uniswap", path)
    assert r1 == r2
    assert len(catalog.runs_for_dao(1)) == 1


def test_identity_includes_chain(catalog, tmp_path, uniswap_doc):
    main = write_doc(tmp_path / "a.json", uniswap_doc)
    sidechain = copy.deepcopy(uniswap_doc)
    sidechain["chain_id"] = 10
    side = write_doc(tmp_path / "b.json", sidechain)
    padded = copy.deepcopy(uniswap_doc)
    padded["dao_name"] = "  Uniswap "
    pad = write_doc(tmp_path / "c.json", padded)

    catalog.import_file(main)
    catalog.import_file(side)
    outcome = catalog.import_file(pad)

    # the padded name resolves to the chain-1 dao (no third identity);
    # bytes differ from the first import, so it lands as a second run
    assert len(catalog.daos()) == 2
    assert outcome.status == "imported"
    assert len(catalog.runs_for_dao(1)) == 2

    identical = catalog.import_file(pad)
    assert identical.status == "skipped-identical"


def test_replay_reconstructs_state(catalog, tmp_path, uniswap_doc):
    catalog.replace_snapshot("Uniswap", write_doc(tmp_path / "u.json", uniswap_doc))

    reopened = RunCatalog(catalog.root)
    assert reopened.daos() == catalog.daos()
    assert reopened.latest_snapshot("Uniswap") == catalog.latest_snapshot("Uniswap")


def test_replay_tolerates_torn_tail(catalog, tmp_path, uniswap_doc):
    catalog.replace_snapshot("Uniswap", write_doc(tmp_path / "u.json", uniswap_doc))
    with open(catalog.log_path, "a", encoding="utf-8") as fh:
        fh.write('{"type":"run","run_id":2,"dao_id":1,"crea')  # power cut mid-record

    reopened = RunCatalog(catalog.root)
    assert len(reopened.runs_for_dao(1)) == 1


def test_replay_rejects_corrupt_middle(catalog, tmp_path, uniswap_doc):
    catalog.replace_snapshot("Uniswap", write_doc(tmp_path / "u.json", uniswap_doc))
    lines = catalog.log_path.read_text(encoding="utf-8").splitlines()
    lines.insert(1, "garbage")
    catalog.log_path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    with pytest.raises(CatalogError):
        RunCatalog(catalog.root)


def test_bad_header_rejected(tmp_path):
    root = tmp_path / "cat"
    root.mkdir()
    (root / "blobs").mkdir()
    (root / "log").write_text('{"catalog_version": 99}\n', encoding="utf-8")
    with pytest.raises(CatalogError):
        RunCatalog(root)


def test_blocks_stored_verbatim_after_normalisation(catalog, tmp_path, uniswap_doc):
    doc = copy.deepcopy(uniswap_doc)
    doc["decentralisation"]["on_chain_automation"] = True  # normalised to "Yes"
    doc["decentralisation"]["custom_note"] = "kept as-is"
    catalog.replace_snapshot("Uniswap", write_doc(tmp_path / "u.json", doc))

    run = catalog.runs_for_dao(1)[0]
    blocks = catalog.raw_blocks_for_run(run)
    assert blocks["decentralisation"]["on_chain_automation"] == "Yes"
    assert blocks["decentralisation"]["custom_note"] == "kept as-is"
    assert blocks["network_participation"] == uniswap_doc["network_participation"]


def test_blob_payloads_are_content_addressed(catalog, tmp_path, uniswap_doc):
    other = copy.deepcopy(uniswap_doc)
    other["dao_name"] = "Mirror"  # same blocks, different identity
    catalog.import_file(write_doc(tmp_path / "a.json", uniswap_doc))
    catalog.import_file(write_doc(tmp_path / "b.json", other))

    run_a = catalog.runs_for_dao(1)[0]
    run_b = catalog.runs_for_dao(2)[0]
    assert run_a.blocks == run_b.blocks  # shared digests, stored once
    digests = {d for r in (run_a, run_b) for d in r.blocks.values()}
    assert len(list(catalog.blob_dir.iterdir())) == len(digests)


def test_log_is_append_only_across_operations(catalog, tmp_path, uniswap_doc):
    path = write_doc(tmp_path / "u.json", uniswap_doc)
    catalog.replace_snapshot("Uniswap", path)
    before = catalog.log_path.read_text(encoding="utf-8")

    v2 = copy.deepcopy(uniswap_doc)
    v2["voting_efficiency"]["total_proposals"] = 84
    catalog.replace_snapshot("Uniswap", write_doc(tmp_path / "v2.json", v2))
    after = catalog.log_path.read_text(encoding="utf-8")
    assert after.startswith(before)  # prior records untouched


def test_import_order_follows_timestamps(catalog, tmp_path, uniswap_doc):
    newer = copy.deepcopy(uniswap_doc)
    newer["timestamp"] = "2025-05-01T00:00:00"
    newer["accumulated_funds"]["treasury_value_usd"] = 1.0
    data = tmp_path / "data"
    data.mkdir()
    # filename order is reversed on purpose; timestamp should win
    write_doc(data / "0_newer.json", newer)
    write_doc(data / "1_older.json", uniswap_doc)

    catalog.import_directory(data)
    runs = catalog.runs_for_dao(1)
    assert len(runs) == 2
    assert catalog.latest_snapshot("Uniswap").accumulated_funds.treasury_value_usd == 1.0
