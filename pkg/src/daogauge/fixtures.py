"""Seeded synthetic snapshot corpus.

Stands in for the private DAO dataset. The first files come from a fixed
coverage deck that exercises every scoring bin, every band and the known
edge cases (anomalous turnout, sparse proposals, missing blocks, nested
metrics, boolean and string automation flags, the legacy block spelling).
Past the deck, DAOs are drawn randomly with the turnout distribution
skewed low, echoing what the real corpus looks like. Output is a pure
function of (n, seed).
"""
from __future__ import annotations

import copy
import json
import random
import re
from datetime import datetime, timedelta
from pathlib import Path
from typing import Any, Callable

CHAINS = (1, 10, 56, 137, 42161)
BASE_TIME = datetime(2025, 4, 6, 12, 0, 0)

# Harvested snapshot of Uniswap governance; the worked example used across
# the docs, the test suite and the shared score-vector file.
EXAMPLE_SNAPSHOT: dict[str, Any] = {
    "dao_name": "Uniswap",
    "chain_id": 1,
    "timestamp": "2025-04-06T17:38:34.119947",
    "network_participation": {
        "num_distinct_voters": 21527,
        "total_members": 393314,
        "participation_rate": 5.4732,
        "unique_proposers": 34,
    },
    "accumulated_funds": {
        "treasury_value_usd": 2087864000.0,
        "circulating_supply": 628494000.0,
        "token_price_usd": 7.21,
        "total_supply": 1000000000.0,
        "circulating_token_percentage": 62.8494,
    },
    "voting_efficiency": {
        "total_proposals": 83,
        "approved_proposals": 57,
        "approval_rate": 68.67,
        "avg_voting_duration_days": 6.07,
    },
    "decentralisation": {
        "largest_holder_percent": 37.15,
        "on_chain_automation": "Yes",
        "proposer_concentration": 40.96,
    },
}

_ADJECTIVES = (
    "amber", "basalt", "cobalt", "drift", "ember", "flint", "garnet",
    "harbor", "indigo", "juniper", "krypton", "lumen", "meridian", "nova",
    "onyx", "prism", "quartz", "ridge", "sable", "tundra", "umbra",
    "vertex", "wisp", "zephyr",
)
_NOUNS = (
    "collective", "guild", "treasury", "protocol", "commons", "assembly",
    "syndicate", "league", "forum", "council",
)


def _base_doc() -> dict[str, Any]:
    # Deliberately a low-band DAO: turnout 4%, modest treasury, mid voting.
    return {
        "network_participation": {
            "num_distinct_voters": 400,
            "total_members": 10000,
            "participation_rate": 4.0,
            "unique_proposers": 12,
        },
        "accumulated_funds": {
            "treasury_value_usd": 5.0e6,
            "circulating_supply": 1.0e8,
            "token_price_usd": 1.0,
            "total_supply": 2.0e8,
            "circulating_token_percentage": 50.0,
        },
        "voting_efficiency": {
            "total_proposals": 20,
            "approved_proposals": 12,
            "approval_rate": 60.0,
            "avg_voting_duration_days": 7.0,
        },
        "decentralisation": {
            "largest_holder_percent": 45.0,
            "on_chain_automation": "Yes",
            "proposer_concentration": 30.0,
        },
    }


def _tweak(**edits: dict[str, Any]) -> Callable[[dict], dict]:
    def apply(doc: dict) -> dict:
        for block, fields in edits.items():
            for key, value in fields.items():
                if value is _DROP:
                    doc[block].pop(key, None)
                else:
                    doc[block][key] = value
        return doc

    return apply


_DROP = object()


def _nested(doc: dict) -> dict:
    blocks = {k: doc.pop(k) for k in list(doc) if isinstance(doc.get(k), dict)}
    doc["metrics"] = blocks
    return doc


def _legacy_spelling(doc: dict) -> dict:
    doc["decentralization"] = doc.pop("decentralisation")
    return doc


def _drop_blocks(doc: dict) -> dict:
    for key in list(doc):
        if isinstance(doc[key], dict):
            del doc[key]
    return doc


# (slug, mutator) pairs; order fixed, coverage documented per entry.
TEMPLATES: tuple[tuple[str, Callable[[dict], dict]], ...] = (
    ("baseline_low", lambda d: d),
    ("high_turnout", _tweak(network_participation={"num_distinct_voters": 5000, "participation_rate": 50.0})),
    ("mid_turnout", _tweak(network_participation={"num_distinct_voters": 2500, "participation_rate": 25.0})),
    ("boundary_turnout_40", _tweak(network_participation={"num_distinct_voters": 4000, "participation_rate": 40.0})),
    ("turnout_anomaly", _tweak(network_participation={"num_distinct_voters": 15000, "participation_rate": 150.0})),
    ("zero_members", _tweak(network_participation={"total_members": 0, "participation_rate": 0.0})),
    ("treasury_giant", _tweak(accumulated_funds={"treasury_value_usd": 2.5e9})),
    ("treasury_100m_concentrated", _tweak(accumulated_funds={"treasury_value_usd": 1.5e8})),
    ("treasury_100m_distributed", _tweak(accumulated_funds={"treasury_value_usd": 1.5e8, "circulating_supply": 1.2e8, "circulating_token_percentage": 60.0})),
    ("treasury_10m_relative", _tweak(accumulated_funds={"treasury_value_usd": 5.0e7})),
    ("treasury_1m_relative", _tweak(accumulated_funds={"treasury_value_usd": 2.0e6, "circulating_supply": 3.0e7, "circulating_token_percentage": 15.0})),
    ("treasury_poor", _tweak(accumulated_funds={"treasury_value_usd": 5.0e5})),
    ("no_treasury", _tweak(accumulated_funds={"treasury_value_usd": _DROP})),
    ("circ_fallback", _tweak(accumulated_funds={"treasury_value_usd": 1.5e8, "circulating_supply": _DROP, "total_supply": _DROP, "circulating_token_percentage": 72.5})),
    ("approval_high", _tweak(voting_efficiency={"approval_rate": 82.0, "approved_proposals": 16})),
    ("approval_low", _tweak(voting_efficiency={"approval_rate": 25.0, "approved_proposals": 5})),
    ("duration_long", _tweak(voting_efficiency={"approval_rate": 80.0, "avg_voting_duration_days": 21.0})),
    ("duration_short", _tweak(voting_efficiency={"avg_voting_duration_days": 2.0})),
    ("few_proposals", _tweak(voting_efficiency={"total_proposals": 2, "approved_proposals": 1})),
    ("fraction_approval", _tweak(voting_efficiency={"approval_rate": 0.55})),
    ("decentralised_gem", _tweak(decentralisation={"largest_holder_percent": 6.0})),
    (
        "automation_bonus",
        _tweak(
            network_participation={"num_distinct_voters": 2500, "participation_rate": 25.0},
            decentralisation={"largest_holder_percent": 20.0, "on_chain_automation": True},
        ),
    ),
    (
        "automation_declined",
        _tweak(
            network_participation={"num_distinct_voters": 2500, "participation_rate": 25.0},
            decentralisation={"largest_holder_percent": 20.0, "on_chain_automation": "no"},
        ),
    ),
    (
        "unknown_flag",
        _tweak(
            network_participation={"num_distinct_voters": 2500, "participation_rate": 25.0},
            decentralisation={"largest_holder_percent": 20.0, "on_chain_automation": "sometimes"},
        ),
    ),
    ("whale_dominated", _tweak(decentralisation={"largest_holder_percent": 75.0, "on_chain_automation": False})),
    (
        "nested_metrics",
        lambda d: _nested(
            _tweak(
                network_participation={"num_distinct_voters": 5000, "participation_rate": 50.0},
                accumulated_funds={"treasury_value_usd": 2.0e9},
                voting_efficiency={"approval_rate": 80.0, "approved_proposals": 16},
                decentralisation={"largest_holder_percent": 5.0},
            )(d)
        ),
    ),
    (
        "legacy_spelling",
        lambda d: _legacy_spelling(
            _tweak(
                network_participation={"num_distinct_voters": 2500, "participation_rate": 25.0},
                decentralisation={"largest_holder_percent": 30.0},
            )(d)
        ),
    ),
    ("missing_blocks", _drop_blocks),
    (
        "health_extra",
        lambda d: {**d, "health_metrics": {"uptime_pct": 99.5, "indexer_lag_blocks": 12}},
    ),
    (
        "medium_band",
        _tweak(
            network_participation={"num_distinct_voters": 5000, "participation_rate": 50.0},
            accumulated_funds={"treasury_value_usd": 1.5e8, "circulating_supply": 1.2e8, "circulating_token_percentage": 60.0},
            voting_efficiency={"approval_rate": 25.0, "approved_proposals": 5},
            decentralisation={"largest_holder_percent": 40.0},
        ),
    ),
)


def _slugify(name: str) -> str:
    return re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_")


def _name_for(idx: int) -> str:
    adj = _ADJECTIVES[idx % len(_ADJECTIVES)]
    noun = _NOUNS[(idx // len(_ADJECTIVES)) % len(_NOUNS)]
    return f"{adj.title()} {noun.title()}"


def _random_doc(rng: random.Random) -> dict[str, Any]:
    members = int(10 ** rng.uniform(3.0, 6.0))
    if rng.random() < 0.7:
        turnout = rng.uniform(0.2, 9.5)
    else:
        turnout = rng.uniform(10.5, 65.0)
    voters = max(1, round(members * turnout / 100.0))

    circulating = 10 ** rng.uniform(6.0, 9.0)
    price = 10 ** rng.uniform(-2.0, 1.5)
    total = circulating * rng.uniform(1.2, 3.0)
    treasury = 10 ** rng.uniform(5.0, 9.7)

    proposals = rng.randint(0, 120)
    approved = round(proposals * rng.uniform(0.2, 0.95))
    if rng.random() < 0.15:
        approval: float = round(rng.uniform(0.2, 0.9), 3)  # fraction form
    else:
        approval = round(rng.uniform(15.0, 92.0), 2)

    doc: dict[str, Any] = {
        "network_participation": {
            "num_distinct_voters": voters,
            "total_members": members,
            "participation_rate": round(100.0 * voters / members, 4),
            "unique_proposers": rng.randint(1, 60),
        },
        "accumulated_funds": {
            "treasury_value_usd": round(treasury, 2),
            "circulating_supply": round(circulating, 2),
            "token_price_usd": round(price, 4),
            "total_supply": round(total, 2),
            "circulating_token_percentage": round(100.0 * circulating / total, 4),
        },
        "voting_efficiency": {
            "total_proposals": proposals,
            "approved_proposals": approved,
            "approval_rate": approval,
            "avg_voting_duration_days": round(rng.uniform(1.5, 18.0), 2),
        },
        "decentralisation": {
            "largest_holder_percent": round(rng.uniform(3.0, 85.0), 2),
            "on_chain_automation": rng.choice(["Yes", "No", True, False]),
            "proposer_concentration": round(rng.uniform(10.0, 90.0), 2),
        },
    }
    if rng.random() < 0.1:
        del doc["decentralisation"]
    if rng.random() < 0.1:
        del doc["accumulated_funds"]["token_price_usd"]
    if rng.random() < 0.08:
        doc["health_metrics"] = {
            "uptime_pct": round(rng.uniform(90.0, 100.0), 2),
            "indexer_lag_blocks": rng.randint(0, 50),
        }
    return doc


def generate_corpus(n: int, seed: int) -> list[tuple[str, dict]]:
    """Build n snapshot documents; returns (filename, document) pairs."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    out: list[tuple[str, dict]] = []
    used_names: set[str] = set()

    for i in range(n):
        if i < len(TEMPLATES):
            slug, mutate = TEMPLATES[i]
            doc = mutate(copy.deepcopy(_base_doc()))
            name = _name_for(i)
        else:
            doc = _random_doc(rng)
            name = _name_for(len(TEMPLATES) + rng.randint(0, 10_000))
            slug = None
        while name in used_names:
            name = f"{name} {len(used_names)}"
        used_names.add(name)

        identity = {
            "dao_name": name,
            "chain_id": CHAINS[i % len(CHAINS)],
            "timestamp": (BASE_TIME + timedelta(days=i)).isoformat(),
        }
        doc = {**identity, **doc}
        filename = f"{i:03d}_{slug or _slugify(name)}.json"
        out.append((filename, doc))
    return out


def write_corpus(out_dir: str | Path, n: int, seed: int) -> list[Path]:
    root = Path(out_dir)
    root.mkdir(parents=True, exist_ok=True)
    written = []
    for filename, doc in generate_corpus(n, seed):
        path = root / filename
        path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
        written.append(path)
    return written
