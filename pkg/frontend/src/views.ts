/**
 * The six workbench views as pure render functions over service responses.
 *
 * Every number shown here (weight, score, rank) is read from a response
 * field; the functions format, they never compute.
 */

import { escapeHtml, formatPercent, formatScore, type Locale } from './format.js';
import { renderAnswerControl, scaleChip, showstopperBadge, weightCell } from './render.js';
import type {
  CatalogueEnvelope,
  DraftCriterion,
  DirectiveResponse,
  ProfileDoc,
  ReportDoc,
  WhatIfResponse,
} from './types.js';

export type WorkbenchViewKind =
  | 'catalogue-browser'
  | 'refinement'
  | 'weighting'
  | 'assessment'
  | 'comparison'
  | 'whatif';

/** One weighting row exactly as the service reported it (draft or child). */
export type WeightingRow = DraftCriterion;

export function weightingRowsFromResponse(response: DirectiveResponse): WeightingRow[] {
  if (response.draft) {
    return response.draft.criteria;
  }
  if (response.child) {
    return response.child.catalogue.criteria.map((criterion) => ({
      index: criterion.index,
      question: criterion.question,
      rating: criterion.rating,
      showstopper: criterion.showstopper ?? false,
      scale: criterion.scale?.kind ?? null,
      weight: criterion.weight,
    }));
  }
  return [];
}

export function renderCatalogueBrowser(envelope: CatalogueEnvelope): string {
  const cat = envelope.catalogue;
  const rows = cat.criteria
    .map(
      (criterion) =>
        `<tr data-index="${escapeHtml(criterion.index)}">` +
        `<td>${escapeHtml(criterion.index)}</td>` +
        `<td>${escapeHtml(criterion.category)}</td>` +
        `<td>${escapeHtml(criterion.question)}</td>` +
        `</tr>`,
    )
    .join('');
  const stats = envelope.stats
    ? `<p class="stats">N=${envelope.stats.n_total} ` +
      `(K=${envelope.stats.n_numeric}, L=${envelope.stats.n_boolean}, ` +
      `M=${envelope.stats.n_likert})</p>`
    : '';
  return (
    `<section class="view catalogue-browser">` +
    `<h2>${escapeHtml(cat.title)} <small>layer ${cat.layer}, v${cat.version}</small></h2>` +
    stats +
    `<table><thead><tr><th>index</th><th>category</th><th>question</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>` +
    `</section>`
  );
}

export function renderRefinementView(envelope: CatalogueEnvelope): string {
  const rows = envelope.catalogue.criteria
    .map(
      (criterion) =>
        `<tr data-index="${escapeHtml(criterion.index)}">` +
        `<td>${escapeHtml(criterion.index)}</td>` +
        `<td><input class="reword" name="reword-${escapeHtml(criterion.index)}" ` +
        `value="${escapeHtml(criterion.question)}"></td>` +
        `<td><button class="remove" data-index="${escapeHtml(criterion.index)}">remove</button>` +
        `<input class="remove-justification" ` +
        `name="remove-justification-${escapeHtml(criterion.index)}" ` +
        `placeholder="justification (required)"></td>` +
        `</tr>`,
    )
    .join('');
  return (
    `<section class="view refinement">` +
    `<h2>Refine to the domain <small>removals need a justification</small></h2>` +
    `<table><tbody>${rows}</tbody></table>` +
    `</section>`
  );
}

export function renderWeightingView(rows: WeightingRow[], locale: Locale = 'comma'): string {
  const body = rows
    .map((row) => {
      const ratingOptions = [1, 2, 3, 4, 5]
        .map(
          (value) =>
            `<option value="${value}"${row.rating === value ? ' selected' : ''}>${value}</option>`,
        )
        .join('');
      return (
        `<tr data-index="${escapeHtml(row.index)}">` +
        `<td>${escapeHtml(row.index)}</td>` +
        `<td>${escapeHtml(row.question)}${row.showstopper ? ' ' + showstopperBadge() : ''}</td>` +
        `<td><select class="rating" data-index="${escapeHtml(row.index)}">` +
        `<option value=""${row.rating === null ? ' selected' : ''}>unrated</option>` +
        ratingOptions +
        `</select></td>` +
        `<td><input type="checkbox" class="showstopper" data-index="${escapeHtml(row.index)}"` +
        `${row.showstopper ? ' checked' : ''}></td>` +
        `<td>${scaleChip(row.scale)}</td>` +
        `<td>${weightCell(row.weight, locale)}</td>` +
        `</tr>`
      );
    })
    .join('');
  return (
    `<section class="view weighting">` +
    `<h2>Weight for the business context</h2>` +
    `<table><thead><tr><th>index</th><th>criterion</th><th>rating</th>` +
    `<th>showstopper</th><th>scale</th><th>weight</th></tr></thead>` +
    `<tbody>${body}</tbody></table>` +
    `</section>`
  );
}

export function renderAssessmentView(
  envelope: CatalogueEnvelope,
  profile: ProfileDoc | null,
): string {
  const rows = envelope.catalogue.criteria
    .map((criterion) => {
      const current = profile?.answers[criterion.index];
      return (
        `<li class="question" data-index="${escapeHtml(criterion.index)}">` +
        `<p>${escapeHtml(criterion.index)} ${escapeHtml(criterion.question)}</p>` +
        renderAnswerControl(criterion, current) +
        `</li>`
      );
    })
    .join('');
  const name = profile ? escapeHtml(profile.name) : 'new solution';
  return (
    `<section class="view assessment">` +
    `<h2>Assess ${name}</h2>` +
    `<ol class="questionnaire">${rows}</ol>` +
    `</section>`
  );
}

function reportTable(report: ReportDoc, locale: Locale, highlightRanks?: Set<string>): string {
  const tied = new Set(report.ties.flat());
  const rows = report.cohort
    .map((entry) => {
      const marks: string[] = [];
      if (tied.has(entry.name)) marks.push('<span class="tie-badge">tie</span>');
      if (report.disqualified.includes(entry.name)) {
        marks.push('<span class="disqualified-badge">disqualified</span>');
      }
      const failed = entry.failed_showstoppers.map(escapeHtml).join(', ') || '–';
      const changed = highlightRanks?.has(entry.name) ? ' rank-changed' : '';
      return (
        `<tr class="result${changed}" data-solution="${escapeHtml(entry.name)}">` +
        `<td>${entry.rank}</td>` +
        `<td>${escapeHtml(entry.name)} ${marks.join(' ')}</td>` +
        `<td class="ms" data-ms="${entry.ms}">${formatScore(entry.ms)}</td>` +
        `<td class="fit">${formatPercent(entry.ms_fraction, locale)}</td>` +
        `<td class="failed">${failed}</td>` +
        `</tr>`
      );
    })
    .join('');
  return (
    `<table class="report"><thead><tr><th>rank</th><th>solution</th><th>score</th>` +
    `<th>fit</th><th>failed showstoppers</th></tr></thead><tbody>${rows}</tbody></table>`
  );
}

export function renderComparisonDashboard(report: ReportDoc, locale: Locale = 'comma'): string {
  return (
    `<section class="view comparison">` +
    `<h2>Comparison <small>catalogue ${escapeHtml(report.catalogue_id)} ` +
    `v${report.catalogue_version}</small></h2>` +
    reportTable(report, locale) +
    `</section>`
  );
}

export function renderWhatIfPanel(result: WhatIfResponse | null, locale: Locale = 'comma'): string {
  if (result === null) {
    return (
      `<section class="view whatif"><h2>What-if</h2>` +
      `<p class="hint">No perturbations applied; add one to explore.</p></section>`
    );
  }
  const moved = new Set(result.rank_changes.map((change) => change.solution));
  const changes =
    result.rank_changes.length === 0
      ? '<p class="no-changes">no changes</p>'
      : `<ul class="rank-changes">` +
        result.rank_changes
          .map(
            (change) =>
              `<li class="rank-changed">${escapeHtml(change.solution)}: ` +
              `${change.before} → ${change.after}</li>`,
          )
          .join('') +
        `</ul>`;
  return (
    `<section class="view whatif">` +
    `<h2>What-if <button class="reset">reset</button></h2>` +
    `<div class="columns">` +
    `<div class="before"><h3>before</h3>${reportTable(result.before, locale)}</div>` +
    `<div class="after"><h3>after</h3>${reportTable(result.after, locale, moved)}</div>` +
    `</div>` +
    changes +
    `</section>`
  );
}

export function renderConflictBanner(currentVersion: number): string {
  return (
    `<div class="conflict-banner" role="alert">` +
    `The catalogue changed elsewhere (now v${currentVersion}). ` +
    `<button class="reload">reload</button> to continue; your edit was not applied.` +
    `</div>`
  );
}
