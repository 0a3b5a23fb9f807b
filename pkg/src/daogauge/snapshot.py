"""Canonical DAO snapshot model: parsing, validation, and normalisation.

A snapshot is one harmonised JSON document per DAO.  The five canonical
metric blocks may sit at the document root or under a nested ``metrics``
object; the parser accepts both, prefers root on conflict, and reports
every missing block, type mismatch, and normalisation it applies.
"""

from __future__ import annotations

import copy
import json
import math
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, Mapping

CANONICAL_BLOCKS = (
    "network_participation",
    "accumulated_funds",
    "voting_efficiency",
    "decentralisation",
    "health_metrics",
)

# Blocks whose fields feed scoring; health_metrics is opaque pass-through.
SCORING_BLOCKS = CANONICAL_BLOCKS[:4]

# Upstream files mix spellings; only this alias is recognised.
BLOCK_ALIASES = {"decentralization": "decentralisation"}


class AutomationFlag(Enum):
    """Tri-state on-chain automation indicator."""

    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


def normalize_automation(raw: Any) -> AutomationFlag:
    """Map a raw JSON scalar to the tri-state automation flag.

    Booleans and the case-insensitive strings "Yes"/"No" are recognised
    (``true`` and ``"Yes"`` are the same state); everything else,
    including null/absent, is UNKNOWN.  Total: never raises.
    """
    if raw is True:
        return AutomationFlag.YES
    if raw is False:
        return AutomationFlag.NO
    if isinstance(raw, str):
        lowered = raw.strip().lower()
        if lowered == "yes":
            return AutomationFlag.YES
        if lowered == "no":
            return AutomationFlag.NO
    return AutomationFlag.UNKNOWN


@dataclass(frozen=True)
class ValidationIssue:
    severity: str  # "warning" | "error"
    field_path: str
    message: str


@dataclass
class ValidationReport:
    """Per-document issue list; errors reject, warnings do not."""

    issues: list[ValidationIssue] = field(default_factory=list)

    def add_warning(self, field_path: str, message: str) -> None:
        self.issues.append(ValidationIssue("warning", field_path, message))

    def add_error(self, field_path: str, message: str) -> None:
        self.issues.append(ValidationIssue("error", field_path, message))

    def extend(self, issues: "Iterable[ValidationIssue]") -> None:
        self.issues.extend(issues)

    @property
    def errors(self) -> list[ValidationIssue]:
        return [i for i in self.issues if i.severity == "error"]

    @property
    def warnings(self) -> list[ValidationIssue]:
        return [i for i in self.issues if i.severity == "warning"]

    @property
    def ok(self) -> bool:
        return not self.errors


@dataclass(frozen=True)
class NetworkParticipation:
    num_distinct_voters: int | None = None
    total_members: int | None = None
    participation_rate: float | None = None  # informational; never scored
    unique_proposers: int | None = None


@dataclass(frozen=True)
class AccumulatedFunds:
    treasury_value_usd: float | None = None
    circulating_supply: float | None = None
    total_supply: float | None = None
    circulating_token_percentage: float | None = None  # fallback only
    token_price_usd: float | None = None


@dataclass(frozen=True)
class VotingEfficiency:
    total_proposals: int | None = None
    approved_proposals: int | None = None
    approval_rate: float | None = None  # fraction <= 1 or percentage > 1
    avg_voting_duration_days: float | None = None


@dataclass(frozen=True)
class Decentralisation:
    largest_holder_percent: float | None = None
    on_chain_automation: AutomationFlag = AutomationFlag.UNKNOWN
    proposer_concentration: float | None = None  # display-only
    token_distribution: dict | None = None  # opaque pass-through


@dataclass(frozen=True)
class DaoSnapshot:
    """One DAO's harmonised metric record.

    ``raw_blocks`` holds the normalised verbatim payload of every block
    present in the source document (keyed by canonical name); the typed
    fields are the interpreted views used by scoring.  Immutable after
    construction; safe to share across threads.
    """

    dao_name: str
    chain_id: int | None
    timestamp: str | None
    network_participation: NetworkParticipation | None
    accumulated_funds: AccumulatedFunds | None
    voting_efficiency: VotingEfficiency | None
    decentralisation: Decentralisation | None
    raw_blocks: dict[str, dict] = field(default_factory=dict)

    @property
    def health_metrics(self) -> dict | None:
        return self.raw_blocks.get("health_metrics")

    @property
    def identity_key(self) -> tuple[str, int | None]:
        return (self.dao_name, self.chain_id)

    def capture_time(self) -> datetime | None:
        """Parse the capture timestamp, or None if missing/unparseable."""
        if not self.timestamp:
            return None
        text = self.timestamp.replace("Z", "+00:00")
        try:
            return datetime.fromisoformat(text)
        except ValueError:
            return None

    def to_document(self) -> dict:
        """Serialise back to the canonical root-level JSON layout.

        Round-trip: ``parse_snapshot(s.to_document())`` reproduces ``s``
        for every field the model interprets.
        """
        doc: dict[str, Any] = {"dao_name": self.dao_name}
        if self.chain_id is not None:
            doc["chain_id"] = self.chain_id
        if self.timestamp is not None:
            doc["timestamp"] = self.timestamp
        for name in CANONICAL_BLOCKS:
            if name in self.raw_blocks:
                doc[name] = copy.deepcopy(self.raw_blocks[name])
        return doc


@dataclass
class ParseResult:
    snapshot: DaoSnapshot | None
    report: ValidationReport

    @property
    def ok(self) -> bool:
        return self.snapshot is not None


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _read_number(
    block: Mapping, key: str, path: str, report: ValidationReport
) -> float | None:
    """Numeric field access: absent/mismatch/negative all map to None."""
    if key not in block:
        return None
    value = block[key]
    if not _is_number(value):
        report.add_warning(f"{path}.{key}", "expected a number; ignored")
        return None
    if isinstance(value, float) and not math.isfinite(value):
        report.add_warning(f"{path}.{key}", "non-finite value ignored")
        return None
    if value < 0:
        report.add_warning(f"{path}.{key}", "negative value ignored for scoring")
        return None
    return value


def _read_count(
    block: Mapping, key: str, path: str, report: ValidationReport
) -> int | None:
    value = _read_number(block, key, path, report)
    if value is None:
        return None
    if isinstance(value, float):
        if not value.is_integer():
            report.add_warning(f"{path}.{key}", "expected an integer count; ignored")
            return None
        report.add_warning(f"{path}.{key}", "count given as float; coerced to integer")
        return int(value)
    return int(value)


def _parse_participation(
    block: Mapping, report: ValidationReport
) -> NetworkParticipation:
    path = "network_participation"
    return NetworkParticipation(
        num_distinct_voters=_read_count(block, "num_distinct_voters", path, report),
        total_members=_read_count(block, "total_members", path, report),
        participation_rate=_read_number(block, "participation_rate", path, report),
        unique_proposers=_read_count(block, "unique_proposers", path, report),
    )


def _parse_funds(block: Mapping, report: ValidationReport) -> AccumulatedFunds:
    path = "accumulated_funds"
    return AccumulatedFunds(
        treasury_value_usd=_read_number(block, "treasury_value_usd", path, report),
        circulating_supply=_read_number(block, "circulating_supply", path, report),
        total_supply=_read_number(block, "total_supply", path, report),
        circulating_token_percentage=_read_number(
            block, "circulating_token_percentage", path, report
        ),
        token_price_usd=_read_number(block, "token_price_usd", path, report),
    )


def _parse_voting(block: Mapping, report: ValidationReport) -> VotingEfficiency:
    path = "voting_efficiency"
    parsed = VotingEfficiency(
        total_proposals=_read_count(block, "total_proposals", path, report),
        approved_proposals=_read_count(block, "approved_proposals", path, report),
        approval_rate=_read_number(block, "approval_rate", path, report),
        avg_voting_duration_days=_read_number(
            block, "avg_voting_duration_days", path, report
        ),
    )
    # Upstream data may be inconsistent; surfaced, never rejected.
    if (
        parsed.approved_proposals is not None
        and parsed.total_proposals is not None
        and parsed.approved_proposals > parsed.total_proposals
    ):
        report.add_warning(
            f"{path}.approved_proposals",
            "approved_proposals exceeds total_proposals",
        )
    return parsed


def _parse_decentralisation(
    block: Mapping, report: ValidationReport
) -> Decentralisation:
    path = "decentralisation"
    holder = _read_number(block, "largest_holder_percent", path, report)
    if holder is not None and holder > 100:
        report.add_warning(
            f"{path}.largest_holder_percent",
            "percentage above 100 ignored for scoring",
        )
        holder = None
    distribution = block.get("token_distribution")
    if distribution is not None and not isinstance(distribution, Mapping):
        report.add_warning(f"{path}.token_distribution", "expected an object; ignored")
        distribution = None
    return Decentralisation(
        largest_holder_percent=holder,
        on_chain_automation=normalize_automation(block.get("on_chain_automation")),
        proposer_concentration=_read_number(
            block, "proposer_concentration", path, report
        ),
        token_distribution=dict(distribution) if distribution is not None else None,
    )


def _normalise_decentralisation_payload(
    block: dict, report: ValidationReport
) -> dict:
    """Canonicalise the automation flag to "Yes"/"No" in the stored payload.

    Unrecognised values pass through verbatim; the normalisation is
    recorded so served bytes stay traceable to the source.
    """
    if "on_chain_automation" not in block:
        return block
    raw = block["on_chain_automation"]
    flag = normalize_automation(raw)
    if flag is AutomationFlag.UNKNOWN or raw == flag.value:
        return block
    block["on_chain_automation"] = flag.value
    report.add_warning(
        "decentralisation.on_chain_automation",
        f"normalised {json.dumps(raw)} to {json.dumps(flag.value)}",
    )
    return block


def _collect_blocks(doc: Mapping, report: ValidationReport) -> dict[str, dict]:
    """Locate canonical blocks at root or under ``metrics``; root wins."""
    metrics = doc.get("metrics")
    if metrics is not None and not isinstance(metrics, Mapping):
        report.add_warning("metrics", "expected an object; ignored")
        metrics = None

    raw_blocks: dict[str, dict] = {}
    for name in CANONICAL_BLOCKS:
        candidates: list[tuple[str, str, Any]] = []
        for container, prefix in ((doc, ""), (metrics or {}, "metrics.")):
            for key in (name, *(a for a, c in BLOCK_ALIASES.items() if c == name)):
                if key in container:
                    candidates.append((f"{prefix}{key}", key, container[key]))

        chosen_at = None
        for where, key, value in candidates:
            if not isinstance(value, Mapping):
                report.add_warning(where, "block is not a JSON object; ignored")
                continue
            if chosen_at is None:
                raw_blocks[name] = copy.deepcopy(dict(value))
                chosen_at = where
                if key != name:  # alias spelling; nested placement is fine
                    report.add_warning(where, f"legacy key stored as {name}")
            else:
                report.add_warning(
                    where, f"duplicate block; kept the one at {chosen_at}"
                )

        if name not in raw_blocks:
            report.add_warning(name, "missing block")
    return raw_blocks


def parse_snapshot(doc: Any) -> ParseResult:
    """Parse one decoded JSON document into a DaoSnapshot.

    Total for every JSON object carrying a usable dao_name: problems in
    other fields become warnings with explicit absences, never failures.
    Documents without a dao_name are rejected (MissingIdentity).
    """
    report = ValidationReport()
    if not isinstance(doc, Mapping):
        report.add_error("$", "document is not a JSON object")
        return ParseResult(None, report)

    name_raw = doc.get("dao_name")
    if not isinstance(name_raw, str) or not name_raw.strip():
        report.add_error("dao_name", "MissingIdentity: dao_name missing or empty")
        return ParseResult(None, report)
    dao_name = name_raw.strip()

    chain_id: int | None = None
    chain_raw = doc.get("chain_id")
    if chain_raw is None:
        report.add_warning("chain_id", "missing chain_id")
    elif (
        _is_number(chain_raw)
        and (isinstance(chain_raw, int) or chain_raw.is_integer())
        and chain_raw > 0
    ):
        chain_id = int(chain_raw)
    else:
        report.add_warning("chain_id", "expected a positive integer; ignored")

    timestamp: str | None = None
    ts_raw = doc.get("timestamp")
    if ts_raw is None:
        report.add_warning("timestamp", "missing timestamp")
    elif isinstance(ts_raw, str):
        timestamp = ts_raw
        try:
            datetime.fromisoformat(ts_raw.replace("Z", "+00:00"))
        except ValueError:
            report.add_warning("timestamp", "not an ISO-8601 datetime")
    else:
        report.add_warning("timestamp", "expected a string; ignored")

    raw_blocks = _collect_blocks(doc, report)
    if "decentralisation" in raw_blocks:
        raw_blocks["decentralisation"] = _normalise_decentralisation_payload(
            raw_blocks["decentralisation"], report
        )

    snapshot = DaoSnapshot(
        dao_name=dao_name,
        chain_id=chain_id,
        timestamp=timestamp,
        network_participation=(
            _parse_participation(raw_blocks["network_participation"], report)
            if "network_participation" in raw_blocks
            else None
        ),
        accumulated_funds=(
            _parse_funds(raw_blocks["accumulated_funds"], report)
            if "accumulated_funds" in raw_blocks
            else None
        ),
        voting_efficiency=(
            _parse_voting(raw_blocks["voting_efficiency"], report)
            if "voting_efficiency" in raw_blocks
            else None
        ),
        decentralisation=(
            _parse_decentralisation(raw_blocks["decentralisation"], report)
            if "decentralisation" in raw_blocks
            else None
        ),
        raw_blocks=raw_blocks,
    )
    return ParseResult(snapshot, report)


def parse_snapshot_text(text: str | bytes) -> ParseResult:
    """Parse raw JSON text; syntactic failures become an error report."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        report = ValidationReport()
        report.add_error("$", f"SyntacticError: not valid JSON ({exc.msg})")
        return ParseResult(None, report)
    return parse_snapshot(doc)


def parse_snapshot_file(path: str | Path) -> tuple[ParseResult, bytes]:
    """Read and parse a snapshot file, returning the source bytes too."""
    raw = Path(path).read_bytes()
    return parse_snapshot_text(raw), raw
