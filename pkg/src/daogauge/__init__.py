"""daogauge: DAO sustainability snapshots, scoring, and serving."""

from .indicators import INVALID_TURNOUT, DerivedIndicators, derive_indicators
from .policy import POLICY_VERSION, policy_document
from .scoring import ScoreCard, band_of, score_dao
from .snapshot import AutomationFlag, DaoSnapshot, parse_snapshot

__all__ = [
    "AutomationFlag",
    "DaoSnapshot",
    "DerivedIndicators",
    "INVALID_TURNOUT",
    "POLICY_VERSION",
    "ScoreCard",
    "band_of",
    "derive_indicators",
    "parse_snapshot",
    "policy_document",
    "score_dao",
]

__version__ = "0.1.0"
