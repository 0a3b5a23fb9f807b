// Single-DAO drill-down view model: every score is shown next to the
// raw numbers that produced it, so the rationale is visible without
// leaving the page. Pure data in, pure data out; charts are SVG strings.

import { barChart, pieChart } from "./charts.js";
import {
  INVALID_TURNOUT,
  deriveIndicators,
  normalizeAutomation,
  readCount,
  readNumber,
  scoreDao,
} from "./scoring.js";
import type { ApiPayload, Block, ScoreCard } from "./types.js";

const COLOURS = {
  primary: "#3558a0",
  muted: "#b9c4dd",
  good: "#2e8b57",
  rest: "#d9dee9",
};

export interface ParticipationSection {
  score: number;
  voters: number | null;
  members: number | null;
  turnout_pct: number | null;
  chart: string | null;
}

export interface TreasurySection {
  score: number;
  treasury_usd: number | null;
  circulating_share_pct: number | null;
  relative_treasury_pct: number;
  chart: string | null;
}

export interface GovernanceSection {
  score: number;
  approved: number | null;
  total: number | null;
  approval_pct: number | null;
  duration_days: number | null;
  chart: string | null;
}

export interface DistributionSection {
  score: number;
  largest_holder_pct: number | null;
  automation: "Yes" | "No" | "Unknown";
  no_data: boolean;
  note: string | null;
  chart: string | null;
}

export interface Drilldown {
  dao_id: number;
  dao_name: string;
  chain_id: number | null;
  timestamp: string | null;
  card: ScoreCard;
  participation: ParticipationSection;
  treasury: TreasurySection;
  governance: GovernanceSection;
  distribution: DistributionSection;
  health: Block | null; // null hides the optional health tile
}

function participationSection(np: Block, card: ScoreCard, turnout: number | null): ParticipationSection {
  const voters = readCount(np, "num_distinct_voters");
  const members = readCount(np, "total_members");
  const chart =
    voters !== null && members !== null
      ? barChart(
          [
            { label: "voters", value: voters, colour: COLOURS.primary },
            { label: "members", value: members, colour: COLOURS.muted },
          ],
          "Distinct voters vs total members",
        )
      : null;
  return { score: card.s_participation, voters, members, turnout_pct: turnout, chart };
}

function treasurySection(
  af: Block,
  card: ScoreCard,
  share: number | null,
  relative: number,
): TreasurySection {
  const chart =
    share !== null && share > 0 && share <= 100
      ? pieChart(
          [
            { label: "circulating", value: share, colour: COLOURS.primary },
            { label: "locked", value: 100 - share, colour: COLOURS.rest },
          ],
          "Circulating share of total supply",
        )
      : null;
  return {
    score: card.s_funds,
    treasury_usd: readNumber(af, "treasury_value_usd"),
    circulating_share_pct: share,
    relative_treasury_pct: relative,
    chart,
  };
}

function governanceSection(ve: Block, card: ScoreCard, approval: number | null): GovernanceSection {
  const approved = readCount(ve, "approved_proposals");
  const total = readCount(ve, "total_proposals");
  const chart =
    approved !== null && total !== null && total > 0 && approved <= total
      ? pieChart(
          [
            { label: "approved", value: approved, colour: COLOURS.good },
            { label: "not approved", value: total - approved, colour: COLOURS.rest },
          ],
          "Approved vs total proposals",
        )
      : null;
  return {
    score: card.s_voting,
    approved,
    total,
    approval_pct: approval,
    duration_days: readNumber(ve, "avg_voting_duration_days"),
    chart,
  };
}

function distributionSection(dec: Block, card: ScoreCard): DistributionSection {
  const noData = Object.keys(dec).length === 0;
  const holder = readNumber(dec, "largest_holder_percent");
  const usable = holder !== null && holder <= 100;
  const chart = usable
    ? pieChart(
        [
          { label: "largest holder", value: holder, colour: COLOURS.primary },
          { label: "everyone else", value: 100 - holder, colour: COLOURS.rest },
        ],
        "Largest holder share",
      )
    : null;
  let note: string | null = null;
  if (noData) {
    note = "No decentralisation data; score defaults to 0.6.";
  } else if (!usable) {
    note = "Largest-holder share missing or implausible; score defaults to 0.6.";
  }
  return {
    score: card.s_decentralisation,
    largest_holder_pct: holder,
    automation: normalizeAutomation(dec["on_chain_automation"]),
    no_data: noData,
    note,
    chart,
  };
}

export function buildDrilldown(payload: ApiPayload): Drilldown {
  const card = scoreDao(payload);
  const d = deriveIndicators(payload);
  const turnout = d.turnout_pct === INVALID_TURNOUT ? null : d.turnout_pct;
  const health = Object.keys(payload.health_metrics).length ? payload.health_metrics : null;
  return {
    dao_id: payload.dao_id,
    dao_name: payload.dao_name,
    chain_id: payload.chain_id,
    timestamp: payload.timestamp,
    card,
    participation: participationSection(payload.network_participation, card, turnout),
    treasury: treasurySection(payload.accumulated_funds, card, d.circulating_share_pct, d.relative_treasury_pct),
    governance: governanceSection(payload.voting_efficiency, card, d.approval_pct),
    distribution: distributionSection(payload.decentralisation, card),
    health,
  };
}
