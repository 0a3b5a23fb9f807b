// Generated by scripts/export_shared.py -- do not edit by hand.
// Threshold policy shared with the scoring engine.
export const POLICY = {
  "policy_version": "table2-v1",
  "kpis": [
    {
      "key": "s_participation",
      "label": "Network Participation",
      "rows": [
        {
          "score": 3,
          "when": "turnout > 40%"
        },
        {
          "score": 2,
          "when": "10% <= turnout <= 40%"
        },
        {
          "score": 1,
          "when": "turnout < 10%, or turnout invalid/missing"
        }
      ],
      "notes": [
        "turnout is recomputed as 100 * distinct voters / total members",
        "turnout above 100% or a missing/zero count is treated as invalid"
      ]
    },
    {
      "key": "s_funds",
      "label": "Accumulated Funds",
      "rows": [
        {
          "score": 3,
          "when": "treasury >= $1B"
        },
        {
          "score": 2.25,
          "when": "treasury >= $100M and circulating share > 50%"
        },
        {
          "score": 1.5,
          "when": "treasury >= $100M and circulating share <= 50%"
        },
        {
          "score": 1.5,
          "when": "treasury >= $10M and relative treasury >= 10%"
        },
        {
          "score": 1.25,
          "when": "treasury >= $1M and relative treasury >= 5%"
        },
        {
          "score": 0.75,
          "when": "otherwise (including missing treasury)"
        }
      ],
      "notes": [
        "missing circulating share is treated as 100%",
        "relative treasury = 100 * treasury / (circulating supply * token price), 0 when unknown"
      ]
    },
    {
      "key": "s_voting",
      "label": "Voting Efficiency",
      "rows": [
        {
          "score": 1,
          "when": "fewer than 3 proposals, or proposal count missing"
        },
        {
          "score": 3,
          "when": "approval > 70% and 3 <= duration <= 14 days"
        },
        {
          "score": 2,
          "when": "30% <= approval <= 70% and 3 <= duration <= 14 days"
        },
        {
          "score": 1,
          "when": "otherwise (low approval, duration out of window, or approval missing)"
        }
      ],
      "notes": [
        "approval rates at or below 1 are read as fractions and scaled by 100"
      ]
    },
    {
      "key": "s_decentralisation",
      "label": "Decentralisation",
      "rows": [
        {
          "score": 3,
          "when": "largest holder < 10%"
        },
        {
          "score": 2.4,
          "when": "10% <= largest holder <= 33% and participation score >= 2 and automation Yes"
        },
        {
          "score": 1.8,
          "when": "10% <= largest holder <= 33%, otherwise"
        },
        {
          "score": 1.2,
          "when": "33% < largest holder <= 66%"
        },
        {
          "score": 0.6,
          "when": "largest holder > 66%, or largest holder missing"
        }
      ],
      "notes": [
        "automation Unknown behaves as No"
      ]
    }
  ],
  "bands": [
    {
      "band": "Low",
      "when": "C < 6"
    },
    {
      "band": "Medium",
      "when": "6 <= C < 9"
    },
    {
      "band": "High",
      "when": "C >= 9"
    }
  ],
  "composite_range": [
    3.35,
    12.0
  ],
  "cell_colours": {
    "green_at": 2.4,
    "amber_at": 1.5
  },
  "thresholds": {
    "turnout_high_pct": 40.0,
    "turnout_medium_pct": 10.0,
    "funds_tier_1b_usd": 1000000000.0,
    "funds_tier_100m_usd": 100000000.0,
    "funds_tier_10m_usd": 10000000.0,
    "funds_tier_1m_usd": 1000000.0,
    "circ_share_strong_pct": 50.0,
    "circ_share_default_pct": 100.0,
    "rel_treasury_mid_pct": 10.0,
    "rel_treasury_low_pct": 5.0,
    "min_proposals": 3,
    "approval_high_pct": 70.0,
    "approval_low_pct": 30.0,
    "duration_min_days": 3.0,
    "duration_max_days": 14.0,
    "holder_top_pct": 10.0,
    "holder_mid_pct": 33.0,
    "holder_low_pct": 66.0,
    "participation_for_bonus": 2.0,
    "band_medium_at": 6.0,
    "band_high_at": 9.0
  }
} as const;

export type Policy = typeof POLICY;
