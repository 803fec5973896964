// Thin JSON client for the analysis service.  The transport is injectable
// so contract tests can run against a scripted fake.

import type {
  ChamberPayload,
  EftPayload,
  GraphPayload,
  NetworkPayload,
  ServiceError,
  WhatIfPayload,
} from './types';

export interface TransportResponse {
  status: number;
  text(): Promise<string>;
}

export type Transport = (
  url: string,
  init: { method: string; body?: string; headers?: Record<string, string> },
) => Promise<TransportResponse>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly payload: ServiceError,
  ) {
    super(payload.message || payload.error || `HTTP ${status}`);
  }
}

const defaultTransport: Transport = (url, init) => fetch(url, init);

export class ApiClient {
  constructor(
    private baseUrl: string,
    private transport: Transport = defaultTransport,
  ) {}

  setBaseUrl(url: string): void {
    this.baseUrl = url.replace(/\/+$/, '');
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: Parameters<Transport>[1] = { method };
    if (body !== undefined) {
      init.body = JSON.stringify(body);
      init.headers = { 'Content-Type': 'application/json' };
    }
    const response = await this.transport(this.baseUrl + path, init);
    const raw = await response.text();
    let parsed: unknown = null;
    if (raw) {
      try {
        parsed = JSON.parse(raw);
      } catch {
        throw new ApiError(response.status, {
          error: 'BadResponse',
          message: `unparseable response from ${path}`,
        });
      }
    }
    if (response.status >= 400) {
      throw new ApiError(response.status, parsed as ServiceError);
    }
    return parsed as T;
  }

  getNetwork(): Promise<NetworkPayload> {
    return this.request('GET', '/network');
  }

  putNetwork(network: unknown): Promise<NetworkPayload> {
    return this.request('PUT', '/network', network);
  }

  putCosts(costs: string[]): Promise<{ costs: string[] }> {
    return this.request('PUT', '/costs', { costs });
  }

  getEft(): Promise<EftPayload> {
    return this.request('GET', '/eft');
  }

  getAdjacency(): Promise<GraphPayload> {
    return this.request('GET', '/adjacency');
  }

  getChamber(): Promise<ChamberPayload> {
    return this.request('GET', '/chamber');
  }

  postWhatIf(activity: number, direction: 'up' | 'down'): Promise<WhatIfPayload> {
    return this.request('POST', '/whatif', { activity, direction });
  }
}
