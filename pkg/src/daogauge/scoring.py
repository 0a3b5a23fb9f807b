"""Table-driven KPI scoring engine.

Maps derived indicators plus the raw blocks onto the four KPI scores,
the composite C and the sustainability band. Component scores are
decimal-exact values, so all arithmetic happens in integer hundredths
(0.6 -> 60, 2.25 -> 225) and is only converted back to floats at the
edge. That keeps composite == sum of components under plain equality.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import policy
from .indicators import DerivedIndicators, derive_indicators
from .snapshot import (
    AccumulatedFunds,
    AutomationFlag,
    DaoSnapshot,
    Decentralisation,
    VotingEfficiency,
)

BAND_LOW = "Low"
BAND_MEDIUM = "Medium"
BAND_HIGH = "High"


class OutOfRange(ValueError):
    """Composite outside the representable band range; an engine bug."""


@dataclass(frozen=True)
class ScoreCard:
    s_participation: float
    s_funds: float
    s_voting: float
    s_decentralisation: float
    composite: float
    band: str
    policy_version: str = policy.POLICY_VERSION


def _participation_hundredths(d: DerivedIndicators) -> int:
    if not d.turnout_valid:
        return 100
    turnout = d.turnout_pct
    if turnout > policy.TURNOUT_HIGH_PCT:
        return 300
    if turnout >= policy.TURNOUT_MEDIUM_PCT:
        return 200
    return 100


def _funds_hundredths(f: AccumulatedFunds | None, d: DerivedIndicators) -> int:
    t = 0.0
    if f is not None and f.treasury_value_usd is not None:
        t = f.treasury_value_usd
    circ_share = d.circulating_share_pct
    if circ_share is None:
        circ_share = policy.CIRC_SHARE_DEFAULT_PCT
    if t >= policy.FUNDS_TIER_1B:
        return 300
    if t >= policy.FUNDS_TIER_100M:
        return 225 if circ_share > policy.CIRC_SHARE_STRONG_PCT else 150
    if t >= policy.FUNDS_TIER_10M and d.relative_treasury_pct >= policy.REL_TREASURY_MID_PCT:
        return 150
    if t >= policy.FUNDS_TIER_1M and d.relative_treasury_pct >= policy.REL_TREASURY_LOW_PCT:
        return 125
    return 75


def _voting_hundredths(v: VotingEfficiency | None, d: DerivedIndicators) -> int:
    if v is None or v.total_proposals is None or v.total_proposals < policy.MIN_PROPOSALS:
        return 100
    dur = v.avg_voting_duration_days
    in_window = (
        dur is not None
        and policy.DURATION_MIN_DAYS <= dur <= policy.DURATION_MAX_DAYS
    )
    approval = d.approval_pct
    if approval is not None and in_window:
        if approval > policy.APPROVAL_HIGH_PCT:
            return 300
        if approval >= policy.APPROVAL_LOW_PCT:
            return 200
    return 100


def _decentralisation_hundredths(
    dec: Decentralisation | None, s_part_hundredths: int, flag: AutomationFlag
) -> int:
    h = dec.largest_holder_percent if dec is not None else None
    if h is None:
        return 60
    if h < policy.HOLDER_TOP_PCT:
        return 300
    if h <= policy.HOLDER_MID_PCT:
        if s_part_hundredths >= int(policy.PARTICIPATION_FOR_BONUS * 100) and flag is AutomationFlag.YES:
            return 240
        return 180
    if h <= policy.HOLDER_LOW_PCT:
        return 120
    return 60


def score_participation(d: DerivedIndicators) -> float:
    return _participation_hundredths(d) / 100


def score_funds(f: AccumulatedFunds | None, d: DerivedIndicators) -> float:
    return _funds_hundredths(f, d) / 100


def score_voting(v: VotingEfficiency | None, d: DerivedIndicators) -> float:
    return _voting_hundredths(v, d) / 100


def score_decentralisation(
    dec: Decentralisation | None, s_part: float, flag: AutomationFlag
) -> float:
    return _decentralisation_hundredths(dec, round(s_part * 100), flag) / 100


def band_of(c: float) -> str:
    if not (0.0 <= c <= policy.COMPOSITE_MAX):
        raise OutOfRange(f"composite {c!r} outside [0, {policy.COMPOSITE_MAX}]")
    if c < policy.BAND_MEDIUM_AT:
        return BAND_LOW
    if c < policy.BAND_HIGH_AT:
        return BAND_MEDIUM
    return BAND_HIGH


def score_dao(snapshot: DaoSnapshot) -> ScoreCard:
    """Score one snapshot. Total: every parseable snapshot gets a card."""
    d = derive_indicators(snapshot)
    part = _participation_hundredths(d)
    funds = _funds_hundredths(snapshot.accumulated_funds, d)
    voting = _voting_hundredths(snapshot.voting_efficiency, d)
    dec_block = snapshot.decentralisation
    flag = dec_block.on_chain_automation if dec_block is not None else AutomationFlag.UNKNOWN
    decent = _decentralisation_hundredths(dec_block, part, flag)
    total = part + funds + voting + decent
    return ScoreCard(
        s_participation=part / 100,
        s_funds=funds / 100,
        s_voting=voting / 100,
        s_decentralisation=decent / 100,
        composite=total / 100,
        band=band_of(total / 100),
    )
