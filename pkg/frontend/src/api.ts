/**
 * Typed client over an injectable transport.
 *
 * The transport abstraction keeps the client testable with a stubbed
 * service; the browser entry point plugs in a fetch-based transport.
 */

import type {
  CatalogueEnvelope,
  DirectiveDoc,
  DirectiveResponse,
  PerturbationDoc,
  ProfileDoc,
  ReportDoc,
  WhatIfResponse,
} from './types.js';

export interface HttpResponse {
  status: number;
  headers: Record<string, string>;
  body: unknown;
}

export interface RequestOptions {
  headers?: Record<string, string>;
  body?: unknown;
  query?: Record<string, string>;
}

export type Transport = (
  method: 'GET' | 'POST' | 'PUT',
  path: string,
  options?: RequestOptions,
) => Promise<HttpResponse>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly payload: unknown,
  ) {
    super(`service responded ${status}`);
  }
}

function expect(response: HttpResponse, ...statuses: number[]): HttpResponse {
  if (!statuses.includes(response.status)) {
    throw new ApiError(response.status, response.body);
  }
  return response;
}

export function ifMatch(version: number): Record<string, string> {
  return { 'If-Match': `"${version}"` };
}

export class ApiClient {
  constructor(private readonly transport: Transport) {}

  async createFixture(name: 'general' | 'maas-expected'): Promise<CatalogueEnvelope> {
    const response = await this.transport('POST', '/catalogues', { body: { fixture: name } });
    return expect(response, 201).body as CatalogueEnvelope;
  }

  async getCatalogue(id: string): Promise<CatalogueEnvelope> {
    const response = await this.transport('GET', `/catalogues/${encodeURIComponent(id)}`);
    return expect(response, 200).body as CatalogueEnvelope;
  }

  /**
   * Post a directive batch against the pinned parent version.
   * A 409 surfaces as ApiError(409) carrying the current version.
   */
  async postDirectives(
    catalogueId: string,
    pinnedVersion: number,
    targetLayer: 2 | 3,
    directives: DirectiveDoc[],
    finalize = false,
  ): Promise<DirectiveResponse> {
    const response = await this.transport(
      'POST',
      `/catalogues/${encodeURIComponent(catalogueId)}/directives`,
      {
        headers: ifMatch(pinnedVersion),
        body: { target_layer: targetLayer, directives, finalize },
      },
    );
    return expect(response, 200).body as DirectiveResponse;
  }

  async upsertSolution(profile: ProfileDoc): Promise<{ name: string; version: number }> {
    const response = await this.transport('POST', '/solutions', { body: profile });
    return expect(response, 200, 201).body as { name: string; version: number };
  }

  async getComparison(catalogueId: string, solutions: string[]): Promise<ReportDoc> {
    const response = await this.transport('GET', '/comparisons', {
      query: { catalogue: catalogueId, solutions: solutions.join(',') },
    });
    return expect(response, 200).body as ReportDoc;
  }

  async postWhatIf(
    catalogueId: string,
    solutions: string[],
    perturbations: PerturbationDoc[],
  ): Promise<WhatIfResponse> {
    const response = await this.transport('POST', '/whatif', {
      body: { catalogue: catalogueId, solutions, perturbations },
    });
    return expect(response, 200).body as WhatIfResponse;
  }
}

/** Browser transport over fetch against the workbench service origin. */
export function fetchTransport(baseUrl: string): Transport {
  return async (method, path, options = {}) => {
    let url = baseUrl.replace(/\/$/, '') + path;
    if (options.query) {
      url += '?' + new URLSearchParams(options.query).toString();
    }
    const response = await fetch(url, {
      method,
      headers: {
        ...(options.body !== undefined ? { 'Content-Type': 'application/json' } : {}),
        ...(options.headers ?? {}),
      },
      body: options.body !== undefined ? JSON.stringify(options.body) : undefined,
    });
    const headers: Record<string, string> = {};
    response.headers.forEach((value, key) => {
      headers[key.toLowerCase()] = value;
    });
    const text = await response.text();
    return {
      status: response.status,
      headers,
      body: text ? JSON.parse(text) : null,
    };
  };
}
