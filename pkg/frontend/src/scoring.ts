// Client-side transcription of the KPI scoring policy.
//
// The engine and this module are kept in lockstep by the shared
// score-vector contract (shared/score_vectors.json): every fixture DAO
// must score identically on both sides, field for field. Thresholds
// come from the generated policy module; arithmetic follows the same
// shape as the engine (integer hundredths summed, divided once at the
// edge) so composites compare with plain equality.

import { POLICY } from "./policy.js";
import type { ApiPayload, Band, Block, ScoreCard } from "./types.js";

const T = POLICY.thresholds;

export const POLICY_VERSION: string = POLICY.policy_version;

export const INVALID_TURNOUT = Symbol("invalid turnout");

export interface DerivedIndicators {
  turnout_pct: number | typeof INVALID_TURNOUT;
  approval_pct: number | null;
  circulating_share_pct: number | null;
  relative_treasury_pct: number;
}

export type Automation = "Yes" | "No" | "Unknown";

// Numeric field access mirroring the ingest rules: absent, mistyped,
// non-finite and negative values are all unusable.
export function readNumber(block: Block | undefined, key: string): number | null {
  if (!block || !(key in block)) return null;
  const value = block[key];
  if (typeof value !== "number" || !Number.isFinite(value) || value < 0) return null;
  return value;
}

export function readCount(block: Block | undefined, key: string): number | null {
  const value = readNumber(block, key);
  if (value === null || !Number.isInteger(value)) return null;
  return value;
}

export function normalizeAutomation(raw: unknown): Automation {
  if (raw === true) return "Yes";
  if (raw === false) return "No";
  if (typeof raw === "string") {
    const lowered = raw.trim().toLowerCase();
    if (lowered === "yes") return "Yes";
    if (lowered === "no") return "No";
  }
  return "Unknown";
}

// Largest-holder percentages above 100 are extraction noise and count
// as missing, like on the server.
export function readHolder(block: Block | undefined): number | null {
  const holder = readNumber(block, "largest_holder_percent");
  if (holder !== null && holder > 100) return null;
  return holder;
}

export function deriveIndicators(payload: ApiPayload): DerivedIndicators {
  const np = payload.network_participation;
  const af = payload.accumulated_funds;
  const ve = payload.voting_efficiency;

  let turnout: number | typeof INVALID_TURNOUT = INVALID_TURNOUT;
  const voters = readCount(np, "num_distinct_voters");
  const members = readCount(np, "total_members");
  if (voters !== null && members !== null && voters > 0 && members > 0) {
    const pct = (100.0 * voters) / members;
    if (pct <= 100.0) turnout = pct;
  }

  const rawApproval = readNumber(ve, "approval_rate");
  const approval =
    rawApproval === null ? null : rawApproval > 1.0 ? rawApproval : rawApproval * 100.0;

  const circulating = readNumber(af, "circulating_supply");
  const totalSupply = readNumber(af, "total_supply");
  let share: number | null;
  if (circulating !== null && totalSupply !== null && circulating > 0 && totalSupply > 0) {
    share = (100.0 * circulating) / totalSupply;
  } else {
    share = readNumber(af, "circulating_token_percentage");
  }

  const treasury = readNumber(af, "treasury_value_usd");
  const price = readNumber(af, "token_price_usd");
  let relative = 0.0;
  if (treasury !== null && circulating !== null && price !== null && circulating > 0 && price > 0) {
    relative = (100.0 * treasury) / (circulating * price);
  }

  return {
    turnout_pct: turnout,
    approval_pct: approval,
    circulating_share_pct: share,
    relative_treasury_pct: relative,
  };
}

function participationHundredths(d: DerivedIndicators): number {
  if (d.turnout_pct === INVALID_TURNOUT) return 100;
  const turnout = d.turnout_pct;
  if (turnout > T.turnout_high_pct) return 300;
  if (turnout >= T.turnout_medium_pct) return 200;
  return 100;
}

function fundsHundredths(af: Block, d: DerivedIndicators): number {
  const treasury = readNumber(af, "treasury_value_usd") ?? 0.0;
  const share = d.circulating_share_pct ?? T.circ_share_default_pct;
  if (treasury >= T.funds_tier_1b_usd) return 300;
  if (treasury >= T.funds_tier_100m_usd) {
    return share > T.circ_share_strong_pct ? 225 : 150;
  }
  if (treasury >= T.funds_tier_10m_usd && d.relative_treasury_pct >= T.rel_treasury_mid_pct) {
    return 150;
  }
  if (treasury >= T.funds_tier_1m_usd && d.relative_treasury_pct >= T.rel_treasury_low_pct) {
    return 125;
  }
  return 75;
}

function votingHundredths(ve: Block, d: DerivedIndicators): number {
  const proposals = readCount(ve, "total_proposals");
  if (proposals === null || proposals < T.min_proposals) return 100;
  const duration = readNumber(ve, "avg_voting_duration_days");
  const inWindow =
    duration !== null && duration >= T.duration_min_days && duration <= T.duration_max_days;
  const approval = d.approval_pct;
  if (approval !== null && inWindow) {
    if (approval > T.approval_high_pct) return 300;
    if (approval >= T.approval_low_pct) return 200;
  }
  return 100;
}

function decentralisationHundredths(dec: Block, partHundredths: number): number {
  const holder = readHolder(dec);
  if (holder === null) return 60;
  if (holder < T.holder_top_pct) return 300;
  if (holder <= T.holder_mid_pct) {
    const bonus =
      partHundredths >= Math.round(T.participation_for_bonus * 100) &&
      normalizeAutomation(dec["on_chain_automation"]) === "Yes";
    return bonus ? 240 : 180;
  }
  if (holder <= T.holder_low_pct) return 120;
  return 60;
}

function bandFromHundredths(total: number): Band {
  if (total < T.band_medium_at * 100) return "Low";
  if (total < T.band_high_at * 100) return "Medium";
  return "High";
}

export function bandOf(composite: number): Band {
  if (!(composite >= 0 && composite <= 12)) {
    throw new RangeError(`composite ${composite} outside [0, 12]`);
  }
  if (composite < T.band_medium_at) return "Low";
  if (composite < T.band_high_at) return "Medium";
  return "High";
}

export function scoreDao(payload: ApiPayload): ScoreCard {
  const d = deriveIndicators(payload);
  const part = participationHundredths(d);
  const funds = fundsHundredths(payload.accumulated_funds, d);
  const voting = votingHundredths(payload.voting_efficiency, d);
  const decent = decentralisationHundredths(payload.decentralisation, part);
  const total = part + funds + voting + decent;
  return {
    s_participation: part / 100,
    s_funds: funds / 100,
    s_voting: voting / 100,
    s_decentralisation: decent / 100,
    composite: total / 100,
    band: bandFromHundredths(total),
    policy_version: POLICY_VERSION,
  };
}
