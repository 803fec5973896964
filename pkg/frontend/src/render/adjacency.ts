// Adjacency graph rendering: chambers on a circle, current chamber marked.
// Which vertices count as current comes from the service's chamber answer
// (one term inside a chamber, several on a wall).

import { termKey, type ChamberPayload, type GraphPayload } from '../types';

const R = 130;
const CX = 170;
const CY = 160;

function svgEl<K extends keyof SVGElementTagNameMap>(
  doc: Document,
  tag: K,
): SVGElementTagNameMap[K] {
  return doc.createElementNS('http://www.w3.org/2000/svg', tag);
}

export function renderAdjacency(
  container: HTMLElement,
  graph: GraphPayload | null,
  chamber: ChamberPayload | null,
): void {
  const doc = container.ownerDocument;
  container.replaceChildren();
  if (!graph) {
    const empty = doc.createElement('p');
    empty.className = 'placeholder';
    empty.textContent = 'No adjacency graph yet.';
    container.append(empty);
    return;
  }

  const current = new Set((chamber?.terms ?? []).map(termKey));
  const onWall = chamber?.kind === 'wall';

  const svg = svgEl(doc, 'svg');
  svg.setAttribute('viewBox', `0 0 ${2 * CX} ${2 * CY}`);
  svg.setAttribute('class', 'adjacency');

  const spots = graph.vertices.map((_, index) => {
    const angle = (2 * Math.PI * index) / graph.vertices.length - Math.PI / 2;
    return { x: CX + R * Math.cos(angle), y: CY + R * Math.sin(angle) };
  });

  for (const [i, j] of graph.edges) {
    const a = spots[i];
    const b = spots[j];
    if (!a || !b) {
      continue;
    }
    const line = svgEl(doc, 'line');
    line.setAttribute('x1', String(a.x));
    line.setAttribute('y1', String(a.y));
    line.setAttribute('x2', String(b.x));
    line.setAttribute('y2', String(b.y));
    line.setAttribute('class', 'edge');
    svg.append(line);
  }

  graph.vertices.forEach((term, index) => {
    const spot = spots[index];
    if (!spot) {
      return;
    }
    const key = termKey(term);
    const group = svgEl(doc, 'g');
    const classes = ['vertex'];
    if (current.has(key)) {
      classes.push('current');
      if (onWall) {
        classes.push('tied');
      }
    }
    group.setAttribute('class', classes.join(' '));
    group.setAttribute('data-term', key);

    const circle = svgEl(doc, 'circle');
    circle.setAttribute('cx', String(spot.x));
    circle.setAttribute('cy', String(spot.y));
    circle.setAttribute('r', '26');
    group.append(circle);

    const label = svgEl(doc, 'text');
    label.setAttribute('x', String(spot.x));
    label.setAttribute('y', String(spot.y + 4));
    label.setAttribute('text-anchor', 'middle');
    label.textContent = key;
    group.append(label);

    svg.append(group);
  });

  container.append(svg);
}
