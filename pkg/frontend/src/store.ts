// Session state derived exclusively from service responses.
//
// Every cost edit and what-if query carries a sequence number; a response
// is applied only while no later request of the same kind has already been
// applied, so rapid slider movement can never paint a superseded answer.

import { ApiClient, ApiError } from './api';
import type {
  ChamberPayload,
  EftPayload,
  GraphPayload,
  NetworkPayload,
  ServiceError,
  WhatIfPayload,
} from './types';

export interface ViewState {
  network: NetworkPayload | null;
  eft: EftPayload | null;
  adjacency: GraphPayload | null;
  chamber: ChamberPayload | null;
  whatif: WhatIfPayload | null;
  error: ServiceError | null;
}

export type Listener = (state: ViewState) => void;

export class SessionStore {
  readonly denominator: number;

  private state: ViewState = {
    network: null,
    eft: null,
    adjacency: null,
    chamber: null,
    whatif: null,
    error: null,
  };

  private listeners: Listener[] = [];
  private costSeqIssued = 0;
  private costSeqApplied = 0;
  private whatIfSeqIssued = 0;
  private whatIfSeqApplied = 0;
  // The cost vector the user intends, updated synchronously per edit so
  // overlapping slider moves on different activities compose.
  private targetCosts: string[] = [];

  constructor(
    private api: ApiClient,
    options: { denominator?: number } = {},
  ) {
    this.denominator = options.denominator ?? 100;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  getState(): ViewState {
    return this.state;
  }

  private emit(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  private asServiceError(err: unknown): ServiceError {
    if (err instanceof ApiError) {
      return err.payload;
    }
    return { error: 'TransportError', message: String(err) };
  }

  async loadNetwork(network: unknown): Promise<void> {
    try {
      const stored = await this.api.putNetwork(network);
      const eft = await this.api.getEft();
      const adjacency = await this.api.getAdjacency();
      const chamber = await this.api.getChamber();
      this.targetCosts = [...eft.costs];
      this.costSeqIssued = 0;
      this.costSeqApplied = 0;
      this.emit({ network: stored, eft, adjacency, chamber, whatif: null, error: null });
    } catch (err) {
      this.emit({ error: this.asServiceError(err) });
    }
  }

  async refresh(): Promise<void> {
    try {
      const network = await this.api.getNetwork();
      const eft = await this.api.getEft();
      const adjacency = await this.api.getAdjacency();
      const chamber = await this.api.getChamber();
      this.targetCosts = [...eft.costs];
      this.emit({ network, eft, adjacency, chamber, error: null });
    } catch (err) {
      this.emit({ error: this.asServiceError(err) });
    }
  }

  /** Snap a slider position to an exact rational cost string. */
  costFromNumerator(numerator: number): string {
    if (this.denominator === 1) {
      return String(numerator);
    }
    return `${numerator}/${this.denominator}`;
  }

  async changeCost(activity: number, costString: string): Promise<void> {
    if (this.targetCosts.length === 0) {
      return;
    }
    this.targetCosts = [...this.targetCosts];
    this.targetCosts[activity - 1] = costString;
    const body = [...this.targetCosts];
    const seq = ++this.costSeqIssued;
    try {
      await this.api.putCosts(body);
      const eft = await this.api.getEft();
      const chamber = await this.api.getChamber();
      if (seq <= this.costSeqApplied) {
        return; // a later edit already painted
      }
      this.costSeqApplied = seq;
      this.emit({ eft, chamber, error: null });
    } catch (err) {
      if (seq > this.costSeqApplied) {
        this.costSeqApplied = seq;
        this.emit({ error: this.asServiceError(err) });
      }
    }
  }

  async runWhatIf(activity: number, direction: 'up' | 'down'): Promise<void> {
    const seq = ++this.whatIfSeqIssued;
    try {
      const whatif = await this.api.postWhatIf(activity, direction);
      if (seq <= this.whatIfSeqApplied) {
        return;
      }
      this.whatIfSeqApplied = seq;
      this.emit({ whatif, error: null });
    } catch (err) {
      if (seq > this.whatIfSeqApplied) {
        this.whatIfSeqApplied = seq;
        this.emit({ whatif: null, error: this.asServiceError(err) });
      }
    }
  }
}
