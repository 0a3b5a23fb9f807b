"""Operator CLI: import, serve, score, verify, gen-fixtures.

Every option can also be supplied through a DAOGAUGE_* environment
variable; an explicit flag always wins. Exit codes: 0 success, 1 data or
verification failure, 2 usage error (click's own convention).
"""
from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path

import click
import httpx

from .api import create_catalog_app, create_demo_app
from .catalog import CatalogError, DirectoryUnreadable, RunCatalog
from .fixtures import write_corpus
from .scoring import ScoreCard, score_dao
from .snapshot import parse_snapshot_file
from .verify import payload_to_snapshot, verify_directory

SORT_KEYS = {
    "overall": lambda row: row[2].composite,
    "participation": lambda row: row[2].s_participation,
    "funds": lambda row: row[2].s_funds,
    "voting": lambda row: row[2].s_voting,
    "decentralisation": lambda row: row[2].s_decentralisation,
}

Row = tuple[str, int | None, ScoreCard]


@click.group()
def main() -> None:
    """DAO sustainability scoring and serving toolkit."""


@main.command("import")
@click.option(
    "--data-dir",
    envvar="DAOGAUGE_DATA_DIR",
    required=True,
    type=click.Path(exists=True, file_okay=False),
    help="Directory of snapshot JSON files.",
)
@click.option(
    "--catalog-dir",
    envvar="DAOGAUGE_CATALOG_DIR",
    required=True,
    type=click.Path(file_okay=False),
    help="Catalog directory (created if missing).",
)
def cmd_import(data_dir: str, catalog_dir: str) -> None:
    """Import snapshot files into the run catalog."""
    try:
        catalog = RunCatalog(catalog_dir)
        summary = catalog.import_directory(data_dir)
    except (CatalogError, DirectoryUnreadable) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)

    for outcome in summary.outcomes:
        name = Path(outcome.path).name
        if outcome.status == "rejected":
            first = outcome.report.errors[0] if outcome.report.errors else None
            why = f" ({first.field_path}: {first.message})" if first else ""
            click.echo(f"rejected           {name}{why}")
        else:
            click.echo(f"{outcome.status:18} {name}")
    click.echo(
        f"{summary.imported} imported, {summary.skipped} skipped-identical, "
        f"{summary.rejected} rejected"
    )
    warnings = sum(len(o.report.warnings) for o in summary.outcomes)
    if warnings:
        click.echo(f"{warnings} validation warnings (see catalog reports)")
    if not summary.ok:
        sys.exit(1)


@main.command("serve")
@click.option("--catalog-dir", envvar="DAOGAUGE_CATALOG_DIR", type=click.Path(file_okay=False))
@click.option(
    "--mode",
    envvar="DAOGAUGE_MODE",
    type=click.Choice(["catalog", "demo"]),
    default="catalog",
    show_default=True,
)
@click.option("--bundle", envvar="DAOGAUGE_BUNDLE", type=click.Path(exists=True, dir_okay=False))
@click.option("--host", envvar="DAOGAUGE_HOST", default="127.0.0.1", show_default=True)
@click.option("--port", envvar="DAOGAUGE_PORT", default=8000, type=int, show_default=True)
def cmd_serve(catalog_dir: str | None, mode: str, bundle: str | None, host: str, port: int) -> None:
    """Serve the read-only v1 API."""
    import uvicorn

    if mode == "catalog" and not catalog_dir:
        raise click.UsageError("--catalog-dir is required in catalog mode")
    if mode == "demo" and not bundle:
        raise click.UsageError("--bundle is required in demo mode")

    try:
        if mode == "catalog":
            app = create_catalog_app(catalog_dir)  # type: ignore[arg-type]
        else:
            app = create_demo_app(bundle)  # type: ignore[arg-type]
    except (CatalogError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)

    uvicorn.run(app, host=host, port=port, log_level="warning")


def _rows_from_path(path: Path) -> list[Row]:
    if path.is_dir():
        files = sorted(
            p for p in path.glob("*.json") if p.is_file() and not p.name.startswith(".")
        )
    else:
        files = [path]
    rows: list[Row] = []
    for file in files:
        parsed, _ = parse_snapshot_file(file)
        if not parsed.ok or parsed.snapshot is None:
            raise click.ClickException(f"{file}: does not parse as a snapshot")
        snap = parsed.snapshot
        rows.append((snap.dao_name.strip(), snap.chain_id, score_dao(snap)))
    return rows


def _rows_from_api(base: str) -> list[Row]:
    rows: list[Row] = []
    with httpx.Client(base_url=base, timeout=30.0) as client:
        ids: list[int] = []
        page = 1
        while True:
            resp = client.get("/api/v1/daos", params={"page": page, "page_size": 200})
            resp.raise_for_status()
            body = resp.json()
            ids.extend(item["dao_id"] for item in body["items"])
            if page * body["page_size"] >= body["total"]:
                break
            page += 1
        for start in range(0, len(ids), 200):
            chunk = ids[start : start + 200]
            resp = client.get(
                "/api/v1/daos/metrics/multi",
                params={"dao_ids": ",".join(str(i) for i in chunk)},
            )
            resp.raise_for_status()
            for payload in resp.json():
                if "error" in payload:
                    raise click.ClickException(
                        f"dao_id {payload.get('dao_id')}: {payload['error']}"
                    )
                snap = payload_to_snapshot(payload)
                rows.append((snap.dao_name.strip(), snap.chain_id, score_dao(snap)))
    return rows


def _fmt(x: float) -> str:
    return f"{x:g}"


def _render_table(rows: list[Row]) -> str:
    headers = ["DAO", "PART", "FUNDS", "VOTING", "DECENT", "C", "BAND", "POLICY"]
    cells = [
        [
            name,
            _fmt(card.s_participation),
            _fmt(card.s_funds),
            _fmt(card.s_voting),
            _fmt(card.s_decentralisation),
            _fmt(card.composite),
            card.band,
            card.policy_version,
        ]
        for name, _, card in rows
    ]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for r in cells:
        lines.append("  ".join(r[i].ljust(widths[i]) for i in range(len(headers))).rstrip())
    return "\n".join(lines)


def _render_csv(rows: list[Row]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        [
            "dao_name", "chain_id", "s_participation", "s_funds", "s_voting",
            "s_decentralisation", "composite", "band", "policy_version",
        ]
    )
    for name, chain_id, card in rows:
        writer.writerow(
            [
                name,
                "" if chain_id is None else chain_id,
                _fmt(card.s_participation),
                _fmt(card.s_funds),
                _fmt(card.s_voting),
                _fmt(card.s_decentralisation),
                _fmt(card.composite),
                card.band,
                card.policy_version,
            ]
        )
    return buf.getvalue().rstrip("\n")


def _render_json(rows: list[Row]) -> str:
    out = [
        {
            "dao_name": name,
            "chain_id": chain_id,
            "s_participation": card.s_participation,
            "s_funds": card.s_funds,
            "s_voting": card.s_voting,
            "s_decentralisation": card.s_decentralisation,
            "composite": card.composite,
            "band": card.band,
            "policy_version": card.policy_version,
        }
        for name, chain_id, card in rows
    ]
    return json.dumps(out, indent=2)


@main.command("score")
@click.argument("input_", metavar="INPUT", envvar="DAOGAUGE_INPUT")
@click.option(
    "--format", "-f", "format_",
    envvar="DAOGAUGE_FORMAT",
    type=click.Choice(["table", "json", "csv"]),
    default="table",
    show_default=True,
)
@click.option(
    "--sort",
    envvar="DAOGAUGE_SORT",
    type=click.Choice(sorted(SORT_KEYS)),
    default=None,
    help="Sort rows by a KPI or the overall composite, descending.",
)
def cmd_score(input_: str, format_: str, sort: str | None) -> None:
    """Score DAOs from a snapshot file, a directory, or a running API.

    INPUT is a path, or an http(s) base URL of a daogauge API.
    """
    try:
        if input_.startswith(("http://", "https://")):
            rows = _rows_from_api(input_)
        else:
            path = Path(input_)
            if not path.exists():
                raise click.ClickException(f"{input_}: no such file or directory")
            rows = _rows_from_path(path)
    except httpx.HTTPError as exc:
        raise click.ClickException(f"API unreachable: {exc}")

    if sort is not None:
        rows.sort(key=SORT_KEYS[sort], reverse=True)  # stable, descending

    renderer = {"table": _render_table, "csv": _render_csv, "json": _render_json}[format_]
    click.echo(renderer(rows))


@main.command("verify")
@click.option("--api-base", envvar="DAOGAUGE_API_BASE", required=True)
@click.option(
    "--data-dir",
    envvar="DAOGAUGE_DATA_DIR",
    required=True,
    type=click.Path(exists=True, file_okay=False),
)
def cmd_verify(api_base: str, data_dir: str) -> None:
    """Check that the API serves exactly what the source files contain."""
    with httpx.Client(base_url=api_base, timeout=30.0) as client:
        report = verify_directory(client, data_dir)

    for err in report.errors:
        click.echo(f"error: {err}")
    for check in report.checks:
        if check.ok:
            click.echo(f"ok      {check.dao_name}")
        else:
            click.echo(f"MISMATCH {check.dao_name}")
            for m in check.field_mismatches:
                click.echo(f"  field: {m}")
            for m in check.score_mismatches:
                click.echo(f"  score: {m}")

    fields = sum(len(c.field_mismatches) for c in report.checks)
    scores = sum(len(c.score_mismatches) for c in report.checks)
    click.echo(
        f"{len(report.checks)} daos checked, {fields} field mismatches, "
        f"{scores} score mismatches, {len(report.errors)} errors"
    )
    click.echo("PASS" if report.passed else "FAIL")
    if not report.passed:
        sys.exit(1)


@main.command("gen-fixtures")
@click.option("--n", envvar="DAOGAUGE_N", default=50, type=click.IntRange(min=1), show_default=True)
@click.option("--seed", envvar="DAOGAUGE_SEED", default=7, type=int, show_default=True)
@click.option(
    "--out-dir",
    envvar="DAOGAUGE_OUT_DIR",
    required=True,
    type=click.Path(file_okay=False),
)
def cmd_gen_fixtures(n: int, seed: int, out_dir: str) -> None:
    """Write a deterministic synthetic snapshot corpus."""
    try:
        written = write_corpus(out_dir, n=n, seed=seed)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(f"wrote {len(written)} snapshot files to {out_dir} (seed={seed})")


def run_main() -> None:
    main()


if __name__ == "__main__":
    run_main()
