import { describe, expect, it } from 'vitest';

import {
  renderComparisonDashboard,
  renderWeightingView,
  renderWhatIfPanel,
  weightingRowsFromResponse,
} from '../src/views.js';
import type { DirectiveResponse, WhatIfResponse } from '../src/types.js';
import { sentinelReport } from './stub.js';

describe('renderWeightingView', () => {
  const rows = [
    {
      index: '1.1',
      question: 'What added value?',
      rating: 4,
      showstopper: false,
      scale: 'likert' as const,
      weight: 0.8,
    },
    {
      index: '2.1',
      question: 'Intuitive UI?',
      rating: null,
      showstopper: false,
      scale: null,
      weight: null,
    },
  ];

  it('renders weights exactly as the service reported them', () => {
    const html = renderWeightingView(rows);
    expect(html).toContain('data-weight="0.8"');
    expect(html).toContain('80,0%');
  });

  it('unrated rows show a pending weight and no scale', () => {
    const html = renderWeightingView(rows);
    expect(html).toContain('weight-pending');
    expect(html).toContain('>unscaled<');
  });

  it('respects the locale flag', () => {
    expect(renderWeightingView(rows, 'period')).toContain('80.0%');
  });
});

describe('renderComparisonDashboard', () => {
  it('shows score fields verbatim and formats the fit percent', () => {
    const html = renderComparisonDashboard(sentinelReport());
    expect(html).toContain('data-ms="999.125"');
    expect(html).toContain('>999.125<');
    expect(html).toContain('37,5%');
    expect(html).toContain('12,5%');
  });

  it('marks disqualified rows with their failed showstoppers', () => {
    const html = renderComparisonDashboard(sentinelReport());
    expect(html).toContain('disqualified-badge');
    const betaRow = html.split('<tr').find((chunk) => chunk.includes('Beta'));
    expect(betaRow).toContain('1.1');
  });

  it('flags ties', () => {
    const report = sentinelReport({ ties: [['Alpha', 'Beta']] });
    const html = renderComparisonDashboard(report);
    expect(html.match(/tie-badge/g)).toHaveLength(2);
  });
});

describe('renderWhatIfPanel', () => {
  const result: WhatIfResponse = {
    before: sentinelReport(),
    after: sentinelReport(),
    rank_changes: [
      { solution: 'Beta', before: 2, after: 1 },
      { solution: 'Alpha', before: 1, after: 2 },
    ],
  };

  it('renders before and after columns with highlighted rank changes', () => {
    const html = renderWhatIfPanel(result);
    expect(html).toContain('<h3>before</h3>');
    expect(html).toContain('<h3>after</h3>');
    expect(html).toContain('Beta: 2 → 1');
    expect(html).toContain('rank-changed');
  });

  it('says "no changes" for an empty perturbation outcome', () => {
    const html = renderWhatIfPanel({ ...result, rank_changes: [] });
    expect(html).toContain('no changes');
  });

  it('offers a reset that costs nothing because nothing was persisted', () => {
    expect(renderWhatIfPanel(result)).toContain('class="reset"');
  });
});

describe('weightingRowsFromResponse', () => {
  it('passes a draft through unchanged', () => {
    const response: DirectiveResponse = {
      parent: { id: 'c', version: 2 },
      draft: {
        unrated: ['2.1'],
        criteria: [
          {
            index: '1.1',
            question: 'Q?',
            rating: 3,
            showstopper: false,
            scale: 'boolean',
            weight: 1.0,
          },
        ],
      },
    };
    expect(weightingRowsFromResponse(response)).toEqual(response.draft?.criteria);
  });

  it('maps a finalized child catalogue onto rows', () => {
    const response: DirectiveResponse = {
      parent: { id: 'c', version: 3 },
      child: {
        id: 'c::layer3',
        catalogue: {
          format_version: 1,
          id: 'c::layer3',
          layer: 3,
          title: 'T',
          domain_label: '',
          context_label: '',
          criteria: [
            {
              index: '1.1',
              category: 'General',
              question: 'Q?',
              original_question: 'Q?',
              answer_kind: { kind: 'qualitative' },
              rating: 5,
              showstopper: true,
              scale: { kind: 'boolean' },
              weight: 1.0,
              justification: null,
            },
          ],
          provenance: [],
          version: 1,
        },
        validation: { ok: true, violations: [] },
        stats: { n_total: 1, n_numeric: 0, n_boolean: 1, n_likert: 0 },
        version: 1,
      },
    };
    expect(weightingRowsFromResponse(response)).toEqual([
      {
        index: '1.1',
        question: 'Q?',
        rating: 5,
        showstopper: true,
        scale: 'boolean',
        weight: 1.0,
      },
    ]);
  });
});
