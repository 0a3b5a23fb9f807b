import { readFileSync } from "node:fs";

import type { ApiPayload, ScoreCard } from "../src/types.js";

export interface Vector {
  payload: ApiPayload;
  expected: ScoreCard;
}

export interface VectorBundle {
  policy_version: string;
  corpus: { n: number; seed: number; extra: string[] };
  vectors: Vector[];
}

export function loadVectors(): VectorBundle {
  const url = new URL("../../shared/score_vectors.json", import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as VectorBundle;
}

export function loadDemoPayloads(): ApiPayload[] {
  const url = new URL("../public/demo_payloads.json", import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as ApiPayload[];
}

export function emptyPayload(daoId: number, name: string): ApiPayload {
  return {
    dao_id: daoId,
    dao_name: name,
    chain_id: 1,
    timestamp: "2025-04-06T12:00:00",
    network_participation: {},
    accumulated_funds: {},
    voting_efficiency: {},
    decentralisation: {},
    health_metrics: {},
  };
}
