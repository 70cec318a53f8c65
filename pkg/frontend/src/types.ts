/**
 * Wire types for the workbench HTTP API.
 *
 * These mirror the service's JSON documents one-to-one. The UI renders these
 * fields verbatim; it never derives a score, weight or rank itself.
 */

export type Polarity = 'benefit' | 'cost';

export type ScaleKind = 'boolean' | 'likert' | 'numeric' | 'intervals';

export interface AnswerKindDoc {
  kind: 'qualitative' | 'numeric';
  unit?: string;
  polarity?: Polarity;
}

export interface IntervalBinDoc {
  label: string;
  lo: number | null; // null = open end
  hi: number | null;
}

export interface ScaleDoc {
  kind: ScaleKind;
  unit?: string;
  polarity?: Polarity;
  bins?: IntervalBinDoc[];
}

export interface CriterionDoc {
  index: string;
  category: string;
  question: string;
  original_question: string;
  answer_kind: AnswerKindDoc;
  rating: number | null;
  showstopper: boolean | null;
  scale: ScaleDoc | null;
  weight: number | null;
  justification: string | null;
}

export interface CatalogueDoc {
  format_version: number;
  id: string;
  layer: number;
  title: string;
  domain_label: string;
  context_label: string;
  criteria: CriterionDoc[];
  provenance: unknown[];
  version: number;
}

export interface ValidationDoc {
  ok: boolean;
  violations: { rule: string; index: string | null; message: string }[];
}

export interface StatsDoc {
  n_total: number;
  n_numeric: number;
  n_boolean: number;
  n_likert: number;
}

export interface CatalogueEnvelope {
  catalogue: CatalogueDoc;
  validation: ValidationDoc;
  stats: StatsDoc | null;
  version: number;
}

/** One row of an in-progress weighting (server-computed preview). */
export interface DraftCriterion {
  index: string;
  question: string;
  rating: number | null;
  showstopper: boolean;
  scale: ScaleKind | null;
  weight: number | null;
}

export interface DraftDoc {
  unrated: string[];
  criteria: DraftCriterion[];
}

export interface DirectiveResponse {
  parent: { id: string; version: number };
  child?: CatalogueEnvelope & { id: string };
  draft?: DraftDoc;
}

export interface DirectiveDoc {
  type: 'remove' | 'reword' | 'rate' | 'mark_showstopper' | 'define_intervals' | 'reword_for_scale';
  index: string;
  [extra: string]: unknown;
}

export interface AnswerDoc {
  kind: 'boolean' | 'likert' | 'numeric';
  value: number;
  unit?: string;
}

export interface ProfileDoc {
  format_version: number;
  name: string;
  vendor: string;
  answers: Record<string, AnswerDoc>;
  notes: string;
}

export interface ReportEntryDoc {
  name: string;
  rank: number;
  ms: number;
  ms_max: number;
  ms_fraction: number;
  per_criterion: { index: string; contribution: number }[];
  per_category: Record<string, number>;
  failed_showstoppers: string[];
}

export interface ReportDoc {
  format_version: number;
  catalogue_id: string;
  catalogue_version: number;
  cohort: ReportEntryDoc[];
  ties: string[][];
  disqualified: string[];
}

export interface PerturbationDoc {
  type: 'set_rating' | 'toggle_showstopper' | 'override_answer';
  index: string;
  rating?: number;
  solution?: string;
  answer?: AnswerDoc;
}

export interface RankChangeDoc {
  solution: string;
  before: number;
  after: number;
}

export interface WhatIfResponse {
  before: ReportDoc;
  after: ReportDoc;
  rank_changes: RankChangeDoc[];
}
