"""Seeded generator for adversarial snapshot documents.

Produces documents with absent blocks, absent fields, boundary values and
junk types; used by the scoring property tests and the acceptance range
check.
"""
from __future__ import annotations

import random


def _maybe(rng: random.Random, value, p_absent=0.25):
    return None if rng.random() < p_absent else value


def random_doc(rng: random.Random) -> dict:
    """Adversarial snapshot documents: absences, extremes, junk types."""
    doc: dict = {"dao_name": f"R{rng.randrange(10 ** 6)}", "chain_id": rng.choice([1, 10, None, -3])}
    if rng.random() < 0.9:
        doc["network_participation"] = {
            k: v for k, v in {
                "num_distinct_voters": _maybe(rng, rng.choice([0, 1, 7, 400, 15000, 10 ** 7])),
                "total_members": _maybe(rng, rng.choice([0, 1, 100, 10000, 10 ** 6])),
                "participation_rate": _maybe(rng, rng.uniform(0, 200)),
            }.items() if v is not None
        }
    if rng.random() < 0.9:
        doc["accumulated_funds"] = {
            k: v for k, v in {
                "treasury_value_usd": _maybe(rng, rng.choice(
                    [0.0, 10.0, 9.9e5, 1e6, 9.9e6, 1e7, 9.9e7, 1e8, 9.9e8, 1e9, 5e9])),
                "circulating_supply": _maybe(rng, rng.choice([0.0, 1e6, 1e8, 1e9])),
                "total_supply": _maybe(rng, rng.choice([0.0, 1e8, 1e9, 2e9])),
                "circulating_token_percentage": _maybe(rng, rng.uniform(0, 100)),
                "token_price_usd": _maybe(rng, rng.choice([0.0, 0.01, 1.0, 50.0])),
            }.items() if v is not None
        }
    if rng.random() < 0.9:
        doc["voting_efficiency"] = {
            k: v for k, v in {
                "total_proposals": _maybe(rng, rng.choice([0, 1, 2, 3, 4, 50, 500])),
                "approved_proposals": _maybe(rng, rng.randrange(0, 100)),
                "approval_rate": _maybe(rng, rng.choice(
                    [0.0, 0.3, 0.7, 1.0, 29.99, 30.0, 70.0, 70.01, 100.0])),
                "avg_voting_duration_days": _maybe(rng, rng.choice(
                    [0.0, 2.99, 3.0, 7.0, 14.0, 14.01, 30.0])),
            }.items() if v is not None
        }
    if rng.random() < 0.9:
        doc["decentralisation"] = {
            k: v for k, v in {
                "largest_holder_percent": _maybe(rng, rng.choice(
                    [0.0, 5.0, 10.0, 33.0, 33.01, 66.0, 66.01, 99.0, 150.0])),
                "on_chain_automation": _maybe(rng, rng.choice(
                    [True, False, "Yes", "no", "maybe", 3])),
            }.items() if v is not None
        }
    if rng.random() < 0.3:  # sometimes nest everything under metrics
        blocks = {k: doc.pop(k) for k in list(doc) if isinstance(doc[k], dict)}
        doc["metrics"] = blocks
    return doc
