// Chart rendering: activities layered left to right by dependency depth.
// Layout is presentation only; which nodes and arcs light up comes
// verbatim from the service's critical-path answer.

import type { EftPayload, NetworkPayload } from '../types';

const NODE_W = 92;
const NODE_H = 40;
const GAP_X = 70;
const GAP_Y = 18;

function layerOf(network: NetworkPayload): Map<number, number> {
  const preds = new Map<number, number[]>();
  for (const { id } of network.activities) {
    preds.set(id, []);
  }
  for (const [from, to] of network.arcs) {
    preds.get(to)?.push(from);
  }
  const layer = new Map<number, number>();
  const resolve = (id: number): number => {
    const known = layer.get(id);
    if (known !== undefined) {
      return known;
    }
    const above = (preds.get(id) ?? []).map(resolve);
    const depth = above.length ? Math.max(...above) + 1 : 0;
    layer.set(id, depth);
    return depth;
  };
  for (const { id } of network.activities) {
    resolve(id);
  }
  return layer;
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  doc: Document,
  tag: K,
): SVGElementTagNameMap[K] {
  return doc.createElementNS('http://www.w3.org/2000/svg', tag);
}

export function renderNetwork(
  container: HTMLElement,
  network: NetworkPayload | null,
  eft: EftPayload | null,
): void {
  const doc = container.ownerDocument;
  container.replaceChildren();
  if (!network) {
    const empty = doc.createElement('p');
    empty.className = 'placeholder';
    empty.textContent = 'No network loaded.';
    container.append(empty);
    return;
  }

  const critical = eft?.critical ?? [];
  const criticalNodes = new Set(critical.flat());
  const tied = critical.length > 1;
  const criticalArcs = new Set(
    network.arcs
      .filter(([a, b]) =>
        critical.some((path) => path.includes(a) && path.includes(b)),
      )
      .map(([a, b]) => `${a}->${b}`),
  );

  const layer = layerOf(network);
  const columns = new Map<number, number[]>();
  for (const { id } of network.activities) {
    const depth = layer.get(id) ?? 0;
    const column = columns.get(depth) ?? [];
    column.push(id);
    columns.set(depth, column);
  }
  const position = new Map<number, { x: number; y: number }>();
  for (const [depth, ids] of columns) {
    ids.sort((a, b) => a - b);
    ids.forEach((id, row) => {
      position.set(id, {
        x: 20 + depth * (NODE_W + GAP_X),
        y: 20 + row * (NODE_H + GAP_Y),
      });
    });
  }

  const width =
    40 + (Math.max(...layer.values(), 0) + 1) * (NODE_W + GAP_X) - GAP_X;
  const height =
    40 +
    Math.max(...[...columns.values()].map((c) => c.length)) *
      (NODE_H + GAP_Y) -
    GAP_Y;

  const svg = svgEl(doc, 'svg');
  svg.setAttribute('viewBox', `0 0 ${width} ${height}`);
  svg.setAttribute('class', tied ? 'network wall-tie' : 'network');

  for (const [from, to] of network.arcs) {
    const a = position.get(from);
    const b = position.get(to);
    if (!a || !b) {
      continue;
    }
    const line = svgEl(doc, 'line');
    line.setAttribute('x1', String(a.x + NODE_W));
    line.setAttribute('y1', String(a.y + NODE_H / 2));
    line.setAttribute('x2', String(b.x));
    line.setAttribute('y2', String(b.y + NODE_H / 2));
    const onPath = criticalArcs.has(`${from}->${to}`);
    line.setAttribute('class', onPath ? 'arc critical-arc' : 'arc');
    svg.append(line);
  }

  for (const activity of network.activities) {
    const pos = position.get(activity.id);
    if (!pos) {
      continue;
    }
    const group = svgEl(doc, 'g');
    const classes = ['node'];
    if (criticalNodes.has(activity.id)) {
      classes.push('critical');
      if (tied) {
        classes.push('tied');
      }
    }
    group.setAttribute('class', classes.join(' '));
    group.setAttribute('data-id', String(activity.id));

    const rect = svgEl(doc, 'rect');
    rect.setAttribute('x', String(pos.x));
    rect.setAttribute('y', String(pos.y));
    rect.setAttribute('width', String(NODE_W));
    rect.setAttribute('height', String(NODE_H));
    rect.setAttribute('rx', '6');
    group.append(rect);

    const label = svgEl(doc, 'text');
    label.setAttribute('x', String(pos.x + NODE_W / 2));
    label.setAttribute('y', String(pos.y + 17));
    label.setAttribute('text-anchor', 'middle');
    label.textContent = activity.name ?? String(activity.id);
    group.append(label);

    const cost = svgEl(doc, 'text');
    cost.setAttribute('x', String(pos.x + NODE_W / 2));
    cost.setAttribute('y', String(pos.y + 33));
    cost.setAttribute('text-anchor', 'middle');
    cost.setAttribute('class', 'cost');
    cost.textContent = eft?.costs[activity.id - 1] ?? activity.cost;
    group.append(cost);

    svg.append(group);
  }

  container.append(svg);
}
