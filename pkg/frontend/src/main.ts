// Entry point: wire the store to the DOM.
//
// Sliders edit one activity cost at a time, snapped to hundredths; every
// displayed number comes back from the service, never from local math.

import { ApiClient } from './api';
import { renderAdjacency } from './render/adjacency';
import { renderBanner } from './render/banner';
import { renderNetwork } from './render/network';
import { renderWhatIf } from './render/whatif';
import { SessionStore } from './store';
import type { ViewState } from './store';

const SLIDER_MAX_UNITS = 20;

function byId(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) {
    throw new Error(`missing #${id}`);
  }
  return el;
}

function sliderNumerator(cost: string, denominator: number): number {
  // "p/q" and "p" both snap onto the slider grid for display purposes
  // only; the exact string is preserved until the user moves the slider.
  const [p, q] = cost.split('/');
  const num = Number(p ?? '0');
  const den = Number(q ?? '1');
  return Math.round((num / den) * denominator);
}

function buildControls(store: SessionStore, state: ViewState, host: HTMLElement): void {
  host.replaceChildren();
  if (!state.network || !state.eft) {
    return;
  }
  for (const activity of state.network.activities) {
    const row = document.createElement('div');
    row.className = 'control-row';
    row.setAttribute('data-activity', String(activity.id));

    const label = document.createElement('label');
    label.textContent = `${activity.name ?? activity.id}`;
    row.append(label);

    const slider = document.createElement('input');
    slider.type = 'range';
    slider.min = '0';
    slider.max = String(SLIDER_MAX_UNITS * store.denominator);
    slider.step = '1';
    const current = state.eft.costs[activity.id - 1] ?? activity.cost;
    slider.value = String(sliderNumerator(current, store.denominator));
    slider.addEventListener('input', () => {
      const cost = store.costFromNumerator(Number(slider.value));
      costLabel.textContent = cost;
      void store.changeCost(activity.id, cost);
    });
    row.append(slider);

    const costLabel = document.createElement('span');
    costLabel.className = 'cost-label';
    costLabel.setAttribute('data-field', 'cost');
    costLabel.textContent = current;
    row.append(costLabel);

    const down = document.createElement('button');
    down.textContent = '▼ what-if';
    down.addEventListener('click', () => void store.runWhatIf(activity.id, 'down'));
    const up = document.createElement('button');
    up.textContent = '▲ what-if';
    up.addEventListener('click', () => void store.runWhatIf(activity.id, 'up'));
    row.append(down, up);

    host.append(row);
  }
}

function main(): void {
  const api = new ApiClient('http://127.0.0.1:8787');
  const store = new SessionStore(api);

  const urlInput = byId('service-url') as HTMLInputElement;
  urlInput.addEventListener('change', () => {
    api.setBaseUrl(urlInput.value);
  });

  byId('connect').addEventListener('click', () => void store.refresh());
  byId('load').addEventListener('click', () => {
    const text = (byId('network-json') as HTMLTextAreaElement).value;
    try {
      void store.loadNetwork(JSON.parse(text));
    } catch (err) {
      renderBanner(byId('banner'), {
        error: 'BadInput',
        message: `not JSON: ${err}`,
      });
    }
  });

  const networkHost = byId('network-view');
  const adjacencyHost = byId('adjacency-view');
  const whatifHost = byId('whatif-view');
  const bannerHost = byId('banner');
  const controlsHost = byId('controls');
  const valueHost = byId('eft-value');

  let lastNetwork: ViewState['network'] = null;
  store.subscribe((state) => {
    renderBanner(bannerHost, state.error);
    renderNetwork(networkHost, state.network, state.eft);
    renderAdjacency(adjacencyHost, state.adjacency, state.chamber);
    renderWhatIf(whatifHost, state.whatif);
    valueHost.textContent = state.eft ? `EFT = ${state.eft.value}` : '';
    if (state.network !== lastNetwork) {
      lastNetwork = state.network;
      buildControls(store, state, controlsHost);
    }
  });

  void store.refresh();
}

main();
