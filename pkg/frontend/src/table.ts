// Comparison-table state: scored rows, client-side sorting, summary
// tiles and cell colour banding. Everything here is pure; the DOM layer
// in app.ts renders the results.

import { POLICY } from "./policy.js";
import { scoreDao } from "./scoring.js";
import type { ApiPayload, Band, TableRow } from "./types.js";

export type SortKey =
  | "overall"
  | "s_participation"
  | "s_funds"
  | "s_voting"
  | "s_decentralisation";

export type SortDirection = "asc" | "desc";

export function buildRows(payloads: ApiPayload[]): TableRow[] {
  return payloads.map((payload) => ({
    dao_id: payload.dao_id,
    dao_name: payload.dao_name,
    chain_id: payload.chain_id,
    card: scoreDao(payload),
  }));
}

function sortValue(row: TableRow, key: SortKey): number {
  return key === "overall" ? row.card.composite : row.card[key];
}

// Array.prototype.sort is stable, so equal keys keep their prior order.
export function sortRows(rows: TableRow[], key: SortKey, direction: SortDirection): TableRow[] {
  const sign = direction === "asc" ? 1 : -1;
  return [...rows].sort((a, b) => sign * (sortValue(a, key) - sortValue(b, key)));
}

export interface SummaryTiles {
  high: number;
  medium: number;
  low: number;
  mean_composite: number | null;
}

export function summaryTiles(rows: TableRow[]): SummaryTiles {
  const counts: Record<Band, number> = { High: 0, Medium: 0, Low: 0 };
  let sum = 0;
  for (const row of rows) {
    counts[row.card.band] += 1;
    sum += row.card.composite;
  }
  return {
    high: counts.High,
    medium: counts.Medium,
    low: counts.Low,
    mean_composite: rows.length ? sum / rows.length : null,
  };
}

export type CellColour = "green" | "amber" | "red";

export function cellColour(score: number): CellColour {
  if (score >= POLICY.cell_colours.green_at) return "green";
  if (score >= POLICY.cell_colours.amber_at) return "amber";
  return "red";
}

export function bandColour(band: Band): CellColour {
  if (band === "High") return "green";
  if (band === "Medium") return "amber";
  return "red";
}
