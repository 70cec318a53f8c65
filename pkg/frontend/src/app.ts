/**
 * Workbench controller: pins a catalogue id + version, queues mutations so at
 * most one is in flight, and re-renders every weight, scale and score from
 * the most recent service response.
 *
 * Conflict discipline: a 409 sets a conflict banner and the rejected edit is
 * never retried automatically; the user reloads and decides again. Edits are
 * never applied optimistically.
 */

import { ApiClient, ApiError } from './api.js';
import type { Locale } from './format.js';
import {
  renderCatalogueBrowser,
  renderComparisonDashboard,
  renderConflictBanner,
  renderRefinementView,
  renderAssessmentView,
  renderWeightingView,
  renderWhatIfPanel,
  weightingRowsFromResponse,
  type WeightingRow,
  type WorkbenchViewKind,
} from './views.js';
import { errorCard } from './render.js';
import type {
  CatalogueEnvelope,
  DirectiveDoc,
  PerturbationDoc,
  ProfileDoc,
  ReportDoc,
  WhatIfResponse,
} from './types.js';

export interface WorkbenchState {
  view: WorkbenchViewKind;
  pinned: { id: string; version: number } | null;
  catalogue: CatalogueEnvelope | null;
  weighting: WeightingRow[] | null;
  profile: ProfileDoc | null;
  report: ReportDoc | null;
  whatif: WhatIfResponse | null;
  conflict: { currentVersion: number } | null;
  error: string | null;
  locale: Locale;
}

export class WorkbenchController {
  readonly state: WorkbenchState = {
    view: 'catalogue-browser',
    pinned: null,
    catalogue: null,
    weighting: null,
    profile: null,
    report: null,
    whatif: null,
    conflict: null,
    error: null,
    locale: 'comma',
  };

  /** Pending mutation chain; keeps one in-flight mutation per catalogue. */
  private queue: Promise<void> = Promise.resolve();
  private listeners: (() => void)[] = [];

  constructor(private readonly api: ApiClient) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private changed(): void {
    for (const listener of this.listeners) listener();
  }

  show(view: WorkbenchViewKind): void {
    this.state.view = view;
    this.changed();
  }

  async openCatalogue(id: string): Promise<void> {
    const envelope = await this.api.getCatalogue(id);
    this.state.catalogue = envelope;
    this.state.pinned = { id: envelope.catalogue.id, version: envelope.version };
    this.state.conflict = null;
    this.state.error = null;
    this.changed();
  }

  /** Serialize mutations: the next edit starts only after the current one settles. */
  private enqueue<T>(work: () => Promise<T>): Promise<T> {
    const result = this.queue.then(work);
    this.queue = result.then(
      () => undefined,
      () => undefined,
    );
    return result;
  }

  private async postWeighting(directives: DirectiveDoc[], finalize = false): Promise<void> {
    const pinned = this.state.pinned;
    if (pinned === null) throw new Error('no catalogue pinned');
    if (this.state.conflict !== null) {
      // after a 409 nothing is retried automatically; the user must reload
      throw new Error('catalogue is in conflict; reload before editing');
    }
    try {
      const response = await this.api.postDirectives(
        pinned.id,
        pinned.version,
        3,
        directives,
        finalize,
      );
      this.state.pinned = { id: pinned.id, version: response.parent.version };
      this.state.weighting = weightingRowsFromResponse(response);
      this.state.error = null;
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        const payload = error.payload as { current_version?: number };
        this.state.conflict = { currentVersion: payload.current_version ?? -1 };
      } else if (error instanceof ApiError) {
        this.state.error = JSON.stringify(error.payload);
      } else {
        throw error;
      }
    }
    this.changed();
  }

  /** One rating edit; the response re-renders every weight and scale. */
  rate(index: string, rating: number): Promise<void> {
    return this.enqueue(() =>
      this.postWeighting([{ type: 'rate', index, rating, justification: null }]),
    );
  }

  markShowstopper(index: string, flag: boolean): Promise<void> {
    return this.enqueue(() => this.postWeighting([{ type: 'mark_showstopper', index, flag }]));
  }

  finalizeWeighting(): Promise<void> {
    return this.enqueue(() => this.postWeighting([], true));
  }

  async reloadAfterConflict(): Promise<void> {
    const pinned = this.state.pinned;
    if (pinned === null) return;
    this.state.conflict = null;
    await this.openCatalogue(pinned.id);
  }

  async loadComparison(solutions: string[]): Promise<void> {
    const pinned = this.state.pinned;
    if (pinned === null) throw new Error('no catalogue pinned');
    this.state.report = await this.api.getComparison(pinned.id, solutions);
    this.state.whatif = null;
    this.changed();
  }

  /** Ephemeral: the service persists nothing for a what-if. */
  async runWhatIf(perturbations: PerturbationDoc[]): Promise<void> {
    const pinned = this.state.pinned;
    const report = this.state.report;
    if (pinned === null || report === null) throw new Error('load a comparison first');
    const solutions = report.cohort.map((entry) => entry.name);
    this.state.whatif = await this.api.postWhatIf(pinned.id, solutions, perturbations);
    this.changed();
  }

  /** Nothing was persisted, so reset is purely local. */
  resetWhatIf(): void {
    this.state.whatif = null;
    this.changed();
  }

  render(): string {
    const banner = this.state.conflict
      ? renderConflictBanner(this.state.conflict.currentVersion)
      : '';
    const error = this.state.error ? errorCard(this.state.error) : '';
    return banner + error + this.renderView();
  }

  private renderView(): string {
    const { view, catalogue, weighting, profile, report, whatif, locale } = this.state;
    switch (view) {
      case 'catalogue-browser':
        return catalogue ? renderCatalogueBrowser(catalogue) : this.placeholder();
      case 'refinement':
        return catalogue ? renderRefinementView(catalogue) : this.placeholder();
      case 'weighting':
        return weighting ? renderWeightingView(weighting, locale) : this.placeholder();
      case 'assessment':
        return catalogue ? renderAssessmentView(catalogue, profile) : this.placeholder();
      case 'comparison':
        return report ? renderComparisonDashboard(report, locale) : this.placeholder();
      case 'whatif':
        return renderWhatIfPanel(whatif, locale);
    }
  }

  private placeholder(): string {
    return '<p class="hint">Nothing loaded yet.</p>';
  }
}

/** Browser mount: render into a root element and re-render on change. */
export function mountWorkbench(root: HTMLElement, controller: WorkbenchController): void {
  const repaint = () => {
    root.innerHTML = controller.render();
  };
  controller.onChange(repaint);

  root.addEventListener('change', (event) => {
    const target = event.target as HTMLElement;
    const index = target.dataset['index'];
    if (index === undefined) return;
    if (target.classList.contains('rating')) {
      const value = (target as HTMLSelectElement).value;
      if (value !== '') void controller.rate(index, Number(value));
    } else if (target.classList.contains('showstopper')) {
      void controller.markShowstopper(index, (target as HTMLInputElement).checked);
    }
  });
  root.addEventListener('click', (event) => {
    const target = event.target as HTMLElement;
    if (target.classList.contains('reload')) void controller.reloadAfterConflict();
    if (target.classList.contains('reset')) controller.resetWhatIf();
  });

  repaint();
}
