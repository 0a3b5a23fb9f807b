"""Threshold policy in force for KPI scoring.

Single source of truth for every numeric threshold, the band boundaries
and the policy version string. The scoring engine imports the constants;
the methodology panel and the shared policy artifact are generated from
policy_document(), so prose and engine cannot drift apart.
"""
from __future__ import annotations

POLICY_VERSION = "table2-v1"

# Participation: strict above 40, inclusive at 10.
TURNOUT_HIGH_PCT = 40.0
TURNOUT_MEDIUM_PCT = 10.0

# Funds cascade, first match wins (tiers in USD).
FUNDS_TIER_1B = 1e9
FUNDS_TIER_100M = 1e8
FUNDS_TIER_10M = 1e7
FUNDS_TIER_1M = 1e6
CIRC_SHARE_STRONG_PCT = 50.0  # strict above
REL_TREASURY_MID_PCT = 10.0
REL_TREASURY_LOW_PCT = 5.0
CIRC_SHARE_DEFAULT_PCT = 100.0  # applied when circulating share is unknown

# Voting efficiency.
MIN_PROPOSALS = 3
APPROVAL_HIGH_PCT = 70.0  # strict above
APPROVAL_LOW_PCT = 30.0  # inclusive
DURATION_MIN_DAYS = 3.0  # window inclusive both ends
DURATION_MAX_DAYS = 14.0

# Decentralisation, keyed off the largest holder share.
HOLDER_TOP_PCT = 10.0  # strict below
HOLDER_MID_PCT = 33.0  # inclusive
HOLDER_LOW_PCT = 66.0  # inclusive
PARTICIPATION_FOR_BONUS = 2.0  # s_participation >= 2 required for the 2.4 cell

# Composite bands: boundaries belong to the higher band.
BAND_MEDIUM_AT = 6.0
BAND_HIGH_AT = 9.0
COMPOSITE_MIN = 3.35
COMPOSITE_MAX = 12.0

# Per-cell colour coding used by the dashboard table.
CELL_GREEN_AT = 2.4
CELL_AMBER_AT = 1.5


def policy_document() -> dict:
    """The full threshold table as structured data.

    Row order within a KPI is evaluation order (first match wins).
    """
    return {
        "policy_version": POLICY_VERSION,
        "kpis": [
            {
                "key": "s_participation",
                "label": "Network Participation",
                "rows": [
                    {"score": 3, "when": "turnout > 40%"},
                    {"score": 2, "when": "10% <= turnout <= 40%"},
                    {"score": 1, "when": "turnout < 10%, or turnout invalid/missing"},
                ],
                "notes": [
                    "turnout is recomputed as 100 * distinct voters / total members",
                    "turnout above 100% or a missing/zero count is treated as invalid",
                ],
            },
            {
                "key": "s_funds",
                "label": "Accumulated Funds",
                "rows": [
                    {"score": 3, "when": "treasury >= $1B"},
                    {"score": 2.25, "when": "treasury >= $100M and circulating share > 50%"},
                    {"score": 1.5, "when": "treasury >= $100M and circulating share <= 50%"},
                    {"score": 1.5, "when": "treasury >= $10M and relative treasury >= 10%"},
                    {"score": 1.25, "when": "treasury >= $1M and relative treasury >= 5%"},
                    {"score": 0.75, "when": "otherwise (including missing treasury)"},
                ],
                "notes": [
                    "missing circulating share is treated as 100%",
                    "relative treasury = 100 * treasury / (circulating supply * token price), 0 when unknown",
                ],
            },
            {
                "key": "s_voting",
                "label": "Voting Efficiency",
                "rows": [
                    {"score": 1, "when": "fewer than 3 proposals, or proposal count missing"},
                    {"score": 3, "when": "approval > 70% and 3 <= duration <= 14 days"},
                    {"score": 2, "when": "30% <= approval <= 70% and 3 <= duration <= 14 days"},
                    {"score": 1, "when": "otherwise (low approval, duration out of window, or approval missing)"},
                ],
                "notes": [
                    "approval rates at or below 1 are read as fractions and scaled by 100",
                ],
            },
            {
                "key": "s_decentralisation",
                "label": "Decentralisation",
                "rows": [
                    {"score": 3, "when": "largest holder < 10%"},
                    {"score": 2.4, "when": "10% <= largest holder <= 33% and participation score >= 2 and automation Yes"},
                    {"score": 1.8, "when": "10% <= largest holder <= 33%, otherwise"},
                    {"score": 1.2, "when": "33% < largest holder <= 66%"},
                    {"score": 0.6, "when": "largest holder > 66%, or largest holder missing"},
                ],
                "notes": [
                    "automation Unknown behaves as No",
                ],
            },
        ],
        "bands": [
            {"band": "Low", "when": "C < 6"},
            {"band": "Medium", "when": "6 <= C < 9"},
            {"band": "High", "when": "C >= 9"},
        ],
        "composite_range": [COMPOSITE_MIN, COMPOSITE_MAX],
        "cell_colours": {"green_at": CELL_GREEN_AT, "amber_at": CELL_AMBER_AT},
        # machine-readable copy of the thresholds, for downstream scorers
        "thresholds": {
            "turnout_high_pct": TURNOUT_HIGH_PCT,
            "turnout_medium_pct": TURNOUT_MEDIUM_PCT,
            "funds_tier_1b_usd": FUNDS_TIER_1B,
            "funds_tier_100m_usd": FUNDS_TIER_100M,
            "funds_tier_10m_usd": FUNDS_TIER_10M,
            "funds_tier_1m_usd": FUNDS_TIER_1M,
            "circ_share_strong_pct": CIRC_SHARE_STRONG_PCT,
            "circ_share_default_pct": CIRC_SHARE_DEFAULT_PCT,
            "rel_treasury_mid_pct": REL_TREASURY_MID_PCT,
            "rel_treasury_low_pct": REL_TREASURY_LOW_PCT,
            "min_proposals": MIN_PROPOSALS,
            "approval_high_pct": APPROVAL_HIGH_PCT,
            "approval_low_pct": APPROVAL_LOW_PCT,
            "duration_min_days": DURATION_MIN_DAYS,
            "duration_max_days": DURATION_MAX_DAYS,
            "holder_top_pct": HOLDER_TOP_PCT,
            "holder_mid_pct": HOLDER_MID_PCT,
            "holder_low_pct": HOLDER_LOW_PCT,
            "participation_for_bonus": PARTICIPATION_FOR_BONUS,
            "band_medium_at": BAND_MEDIUM_AT,
            "band_high_at": BAND_HIGH_AT,
        },
    }
