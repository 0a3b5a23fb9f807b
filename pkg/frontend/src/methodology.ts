// The inline "Research Methodology" panel. Content is derived from the
// generated policy module — the same definition the engine and the test
// suites share — never hand-written prose.

import { POLICY } from "./policy.js";

export interface MethodologySection {
  key: string;
  label: string;
  lines: string[];
  notes: string[];
}

export interface Methodology {
  version: string;
  sections: MethodologySection[];
  bands: string[];
  composite_range: [number, number];
  cell_rule: string;
}

export function methodology(): Methodology {
  return {
    version: POLICY.policy_version,
    sections: POLICY.kpis.map((kpi) => ({
      key: kpi.key,
      label: kpi.label,
      lines: kpi.rows.map((row) => `${row.when} → ${row.score}`),
      notes: [...kpi.notes],
    })),
    bands: POLICY.bands.map((band) => `${band.band}: ${band.when}`),
    composite_range: [POLICY.composite_range[0], POLICY.composite_range[1]],
    cell_rule:
      `cell colours: green ≥ ${POLICY.cell_colours.green_at}, ` +
      `amber ≥ ${POLICY.cell_colours.amber_at}, red below`,
  };
}
