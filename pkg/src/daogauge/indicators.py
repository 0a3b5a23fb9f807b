"""Intermediate indicators computed from a snapshot.

Scoring never touches raw snapshot fields directly; everything funnels
through the four derived quantities defined here. Turnout is always
recomputed locally from voters/members, the upstream participation_rate
field is display-only.
"""
from __future__ import annotations

from dataclasses import dataclass

from .snapshot import AccumulatedFunds, DaoSnapshot, NetworkParticipation, VotingEfficiency


class InvalidTurnout:
    """Marker for turnout values that cannot be trusted.

    Modelled as a distinct type rather than a sentinel number so that a
    bad turnout can never accidentally satisfy a numeric threshold.
    """

    _instance: "InvalidTurnout | None" = None

    def __new__(cls) -> "InvalidTurnout":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "InvalidTurnout"


INVALID_TURNOUT = InvalidTurnout()


@dataclass(frozen=True)
class DerivedIndicators:
    turnout_pct: float | InvalidTurnout
    approval_pct: float | None
    circulating_share_pct: float | None
    relative_treasury_pct: float

    @property
    def turnout_valid(self) -> bool:
        return not isinstance(self.turnout_pct, InvalidTurnout)


def compute_turnout(p: NetworkParticipation | None) -> float | InvalidTurnout:
    """Recompute turnout as 100 * voters / members.

    Invalid whenever either count is missing or non-positive, or the
    ratio lands above 100% (anomalous extraction).
    """
    if p is None or p.num_distinct_voters is None or p.total_members is None:
        return INVALID_TURNOUT
    if p.num_distinct_voters <= 0 or p.total_members <= 0:
        return INVALID_TURNOUT
    turnout = 100.0 * p.num_distinct_voters / p.total_members
    if turnout > 100.0:
        return INVALID_TURNOUT
    return turnout


def normalize_approval(v: VotingEfficiency | None) -> float | None:
    """Approval rates above 1 are already percentages; at or below 1 they
    are fractions and get scaled by 100. Exactly 1 counts as a fraction."""
    if v is None or v.approval_rate is None:
        return None
    rate = v.approval_rate
    if rate > 1.0:
        return rate
    return rate * 100.0


def compute_circulating_share(f: AccumulatedFunds | None) -> float | None:
    if f is None:
        return None
    circ = f.circulating_supply
    total = f.total_supply
    if circ is not None and total is not None and circ > 0 and total > 0:
        return 100.0 * circ / total
    if f.circulating_token_percentage is not None:
        return f.circulating_token_percentage
    return None


def compute_relative_treasury(f: AccumulatedFunds | None) -> float:
    """Treasury as a percentage of circulating market cap; 0 when the
    market cap cannot be established."""
    if f is None or f.treasury_value_usd is None:
        return 0.0
    circ = f.circulating_supply
    price = f.token_price_usd
    if circ is None or price is None or circ <= 0 or price <= 0:
        return 0.0
    return 100.0 * f.treasury_value_usd / (circ * price)


def derive_indicators(snapshot: DaoSnapshot) -> DerivedIndicators:
    return DerivedIndicators(
        turnout_pct=compute_turnout(snapshot.network_participation),
        approval_pct=normalize_approval(snapshot.voting_efficiency),
        circulating_share_pct=compute_circulating_share(snapshot.accumulated_funds),
        relative_treasury_pct=compute_relative_treasury(snapshot.accumulated_funds),
    )
