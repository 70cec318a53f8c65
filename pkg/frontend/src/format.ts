/** Display formatting. Scores and weights always come from service fields. */

export type Locale = 'comma' | 'period';

/** One-decimal percentage, e.g. 0.0376 -> "3,8%" (comma) or "3.8%" (period). */
export function formatPercent(fraction: number, locale: Locale = 'comma'): string {
  const text = `${(fraction * 100).toFixed(1)}%`;
  return locale === 'comma' ? text.replace('.', ',') : text;
}

/**
 * Render a score exactly as the service sent it. String(value) preserves the
 * JSON number verbatim, which the display-fidelity tests rely on.
 */
export function formatScore(value: number): string {
  return String(value);
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;')
    .replace(/'/g, '&#39;');
}
