/** Shapes of the JSON documents the service returns (the interchange schema). */

export type RankingMethod = "eigenvector" | "geometric_mean";

/** 1-based index pair/quad, as everywhere in the API. */
export type Pair = [number, number];
export type Quad = [number, number, number, number];

export interface RankingDoc {
  method: RankingMethod;
  weights: number[];
}

export interface EigenDoc {
  lambda_max: number;
  iterations: number;
  residual: number;
}

export interface DiscrepancyDoc {
  values: number[][];
  global: number;
  argmax: Pair;
}

export interface CopDoc {
  delta: number;
  pop_violations: Pair[];
  poip_violations: Quad[];
  pop_safe: boolean;
  poip_safe: boolean;
  pop_threshold: number;
  poip_threshold: number;
  pop_margin: number | null;
  poip_margin: number | null;
}

export interface TriadsDoc {
  is_consistent: boolean;
  worst_triad: [number, number, number] | null;
  worst_product: number;
}

export interface SuggestionDoc {
  position: Pair;
  current_value: number;
  local_discrepancy: number;
  consistent_target: number;
}

export interface BundleDoc {
  n: number;
  labels: string[];
  matrix: number[][];
  ranking: RankingDoc;
  eigen: EigenDoc;
  saaty_index: number;
  discrepancy: DiscrepancyDoc;
  cop: CopDoc;
  triads: TriadsDoc;
  suggestion: SuggestionDoc;
}

export interface StepDoc {
  i: number;
  j: number;
  old_value: number;
  new_value: number;
  timestamp: number;
}

export interface SessionDoc {
  id: string;
  created: number;
  updated: number;
  step_log: StepDoc[];
  bundle: BundleDoc;
}

/** What-if report at a caller-chosen delta (GET /sessions/{id}/cop). */
export interface WhatIfDoc extends CopDoc {
  pop_failures: Pair[];
  poip_failures: Quad[];
}

export interface ApiErrorDetail {
  reason: string;
  row: number | null;
  col: number | null;
}

export interface MatrixPayload {
  labels?: string[];
  matrix: number[][];
}
