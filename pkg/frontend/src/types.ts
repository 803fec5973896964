// Wire types mirroring the service's JSON payloads.
// Every rational is a string ("5/3", "2"); the UI never parses them into
// floats, it renders them verbatim.

export interface ActivityView {
  id: number;
  name?: string;
  cost: string;
}

export interface NetworkPayload {
  activities: ActivityView[];
  arcs: [number, number][];
}

export interface PolynomialPayload {
  n: number;
  terms: number[][];
}

export interface EftPayload {
  costs: string[];
  value: string;
  critical: number[][];
  polynomial: PolynomialPayload;
}

export interface GraphPayload {
  vertices: number[][];
  edges: [number, number][];
}

export interface ChamberPayload {
  kind: 'interior' | 'wall';
  terms: number[][];
}

export interface CrossingPayload {
  step: string;
  value: string;
  tie: number[][];
  next: number[][];
}

export interface HorizonPayload {
  kind: 'stable' | 'floor';
  step?: string;
  critical: number[][];
}

export interface WhatIfPayload {
  activity: number;
  direction: 'up' | 'down';
  start: { value: string; critical: number[][] };
  crossings: CrossingPayload[];
  horizon: HorizonPayload;
  predicted?: number[][];
  prediction?: string;
}

export interface ServiceError {
  error: string;
  message: string;
  detail?: unknown;
}

export function termKey(term: number[]): string {
  return [...term].sort((a, b) => a - b).join(',');
}
