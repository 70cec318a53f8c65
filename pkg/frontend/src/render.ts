/**
 * Answer controls and small widgets, rendered as HTML strings.
 *
 * Controls are scale-driven: a boolean criterion gets a two-state toggle, a
 * likert criterion the five agreement levels, a numeric criterion a number
 * field with its unit, an intervals criterion an ordered bin selector. An
 * unknown scale renders an explicit error card, never a silent default.
 */

import { escapeHtml, formatPercent, type Locale } from './format.js';
import type { AnswerDoc, CriterionDoc, ScaleKind } from './types.js';

export const LIKERT_LEVELS = [
  'Strongly disagree',
  'Disagree',
  'Neither agree nor disagree',
  'Agree',
  'Strongly agree',
] as const;

export function errorCard(message: string): string {
  return `<div class="error-card" role="alert">${escapeHtml(message)}</div>`;
}

export function scaleChip(kind: ScaleKind | null): string {
  const label = kind ?? 'unscaled';
  return `<span class="scale-chip scale-${label}">${escapeHtml(label)}</span>`;
}

export function showstopperBadge(): string {
  return '<span class="showstopper-badge">showstopper</span>';
}

export function weightCell(weight: number | null, locale: Locale = 'comma'): string {
  if (weight === null) {
    return '<span class="weight weight-pending">–</span>';
  }
  // the service computed this weight; the UI only formats it
  return `<span class="weight" data-weight="${weight}">${formatPercent(weight, locale)}</span>`;
}

function booleanToggle(criterion: CriterionDoc, current?: AnswerDoc): string {
  const name = `answer-${criterion.index}`;
  const yes = current?.value === 1 ? ' checked' : '';
  const no = current?.value === 0 ? ' checked' : '';
  const badge = criterion.showstopper ? showstopperBadge() : '';
  return (
    `<fieldset class="answer answer-boolean" data-index="${escapeHtml(criterion.index)}">` +
    badge +
    `<label><input type="radio" name="${name}" value="1"${yes}> yes</label>` +
    `<label><input type="radio" name="${name}" value="0"${no}> no</label>` +
    `</fieldset>`
  );
}

function likertSelector(criterion: CriterionDoc, current?: AnswerDoc): string {
  const name = `answer-${criterion.index}`;
  const options = LIKERT_LEVELS.map((level, position) => {
    const value = position + 1;
    const checked = current?.value === value ? ' checked' : '';
    return (
      `<label class="likert-level">` +
      `<input type="radio" name="${name}" value="${value}"${checked}> ${escapeHtml(level)}` +
      `</label>`
    );
  }).join('');
  return (
    `<fieldset class="answer answer-likert" data-index="${escapeHtml(criterion.index)}">` +
    options +
    `</fieldset>`
  );
}

function numericField(criterion: CriterionDoc, current?: AnswerDoc): string {
  const unit = criterion.scale?.unit ?? '';
  const value = current !== undefined ? ` value="${current.value}"` : '';
  return (
    `<span class="answer answer-numeric" data-index="${escapeHtml(criterion.index)}">` +
    `<input type="number" name="answer-${escapeHtml(criterion.index)}"${value}>` +
    `<span class="unit-suffix">${escapeHtml(unit)}</span>` +
    `</span>`
  );
}

function intervalSelector(criterion: CriterionDoc, current?: AnswerDoc): string {
  const bins = criterion.scale?.bins ?? [];
  const options = bins
    .map((bin, position) => {
      const midpoint =
        bin.lo !== null && bin.hi !== null
          ? (bin.lo + bin.hi) / 2
          : bin.lo !== null
            ? bin.lo + 1
            : (bin.hi ?? 0) - 1;
      const selected =
        current !== undefined && binContains(bin.lo, bin.hi, current.value) ? ' selected' : '';
      return `<option value="${midpoint}" data-bin="${position}"${selected}>${escapeHtml(bin.label)}</option>`;
    })
    .join('');
  return (
    `<select class="answer answer-intervals" name="answer-${escapeHtml(criterion.index)}" ` +
    `data-index="${escapeHtml(criterion.index)}">` +
    options +
    `</select>`
  );
}

function binContains(lo: number | null, hi: number | null, value: number): boolean {
  return (lo === null || value >= lo) && (hi === null || value < hi);
}

export function renderAnswerControl(criterion: CriterionDoc, current?: AnswerDoc): string {
  const scale = criterion.scale;
  if (scale === null) {
    return errorCard(`criterion ${criterion.index} has no scale assigned`);
  }
  switch (scale.kind) {
    case 'boolean':
      return booleanToggle(criterion, current);
    case 'likert':
      return likertSelector(criterion, current);
    case 'numeric':
      return numericField(criterion, current);
    case 'intervals':
      return intervalSelector(criterion, current);
    default:
      return errorCard(
        `criterion ${criterion.index} carries unknown scale "${String(scale.kind)}"`,
      );
  }
}
