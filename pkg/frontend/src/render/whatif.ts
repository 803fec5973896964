// What-if panel: crossings and predictions printed verbatim.
// Every number shown is the exact rational string from the response; the
// panel never reformats or recomputes.

import { termKey, type WhatIfPayload } from '../types';

function pathList(doc: Document, terms: number[][], field: string): HTMLElement {
  const list = doc.createElement('span');
  list.setAttribute('data-field', field);
  list.textContent = terms.map((t) => `{${termKey(t)}}`).join(' ');
  return list;
}

export function renderWhatIf(
  container: HTMLElement,
  payload: WhatIfPayload | null,
): void {
  const doc = container.ownerDocument;
  container.replaceChildren();
  if (!payload) {
    const empty = doc.createElement('p');
    empty.className = 'placeholder';
    empty.textContent = 'Pick an activity and a direction.';
    container.append(empty);
    return;
  }

  const heading = doc.createElement('h3');
  heading.textContent = `Activity ${payload.activity} ${payload.direction}`;
  heading.setAttribute('data-field', 'query');
  container.append(heading);

  const start = doc.createElement('p');
  start.append('Now: value ');
  const startValue = doc.createElement('strong');
  startValue.setAttribute('data-field', 'start-value');
  startValue.textContent = payload.start.value;
  start.append(startValue, ' on ', pathList(doc, payload.start.critical, 'start-critical'));
  container.append(start);

  if (payload.predicted !== undefined) {
    const predicted = doc.createElement('p');
    predicted.append('Predicted successors: ');
    predicted.append(pathList(doc, payload.predicted, 'predicted'));
    if (payload.prediction) {
      const code = doc.createElement('em');
      code.setAttribute('data-field', 'prediction-code');
      code.textContent = ` (${payload.prediction})`;
      predicted.append(code);
    }
    container.append(predicted);
  }

  const crossings = doc.createElement('ol');
  crossings.setAttribute('data-field', 'crossings');
  for (const crossing of payload.crossings) {
    const item = doc.createElement('li');
    item.className = 'crossing';
    const step = doc.createElement('strong');
    step.setAttribute('data-field', 'step');
    step.textContent = crossing.step;
    item.append('after ', step, ' time units: tie ');
    item.append(pathList(doc, crossing.tie, 'tie'));
    item.append(' at value ');
    const value = doc.createElement('span');
    value.setAttribute('data-field', 'value');
    value.textContent = crossing.value;
    item.append(value, ', then ');
    item.append(pathList(doc, crossing.next, 'next'));
    crossings.append(item);
  }
  if (!payload.crossings.length) {
    const item = doc.createElement('li');
    item.textContent = 'No crossing along this ray.';
    crossings.append(item);
  }
  container.append(crossings);

  const horizon = doc.createElement('p');
  horizon.setAttribute('data-field', 'horizon');
  const tail =
    payload.horizon.kind === 'floor'
      ? `cost floor after ${payload.horizon.step ?? '0'}`
      : 'stable from here on';
  horizon.append(`Horizon: ${tail}, critical `);
  horizon.append(pathList(doc, payload.horizon.critical, 'horizon-critical'));
  container.append(horizon);
}
