// Shapes shared across the dashboard modules. Payloads mirror the
// enhanced_metrics endpoint: identity fields plus the five metric
// blocks, absent blocks serialised as empty objects.

export type Block = Record<string, unknown>;

export interface ApiPayload {
  dao_id: number;
  dao_name: string;
  chain_id: number | null;
  timestamp: string | null;
  network_participation: Block;
  accumulated_funds: Block;
  voting_efficiency: Block;
  decentralisation: Block;
  health_metrics: Block;
}

export interface DaoListItem {
  dao_id: number;
  dao_name: string;
  chain_id: number | null;
  timestamp: string | null;
}

export interface Listing {
  total: number;
  page: number;
  page_size: number;
  items: DaoListItem[];
}

export type Band = "Low" | "Medium" | "High";

export interface ScoreCard {
  s_participation: number;
  s_funds: number;
  s_voting: number;
  s_decentralisation: number;
  composite: number;
  band: Band;
  policy_version: string;
}

export interface TableRow {
  dao_id: number;
  dao_name: string;
  chain_id: number | null;
  card: ScoreCard;
}

export interface RowError {
  dao_id: number;
  error: string;
}
