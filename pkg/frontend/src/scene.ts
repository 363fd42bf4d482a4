/** Pure scene geometry: quiver document -> drawable shapes.
 *
 * Vertices sit on a fixed circle ordered by index, so successive mutations
 * stay visually stable.  Each colour index maps to an evenly spaced hue.
 * Arrows curve away from the chord so parallel and opposite arrows never
 * overlap, and arrows that differ from the previous quiver are flagged.
 */

import { normalizeDoc, type QuiverDocument } from "./types.js";

export interface SceneNode {
  id: number;
  x: number;
  y: number;
}

export interface SceneArrow {
  from: number;
  to: number;
  colour: number;
  mult: number;
  hue: number;
  /** e.g. "(2)" or "(2) x3" for multiplicity 3 */
  label: string;
  /** SVG path for the curved shaft */
  path: string;
  labelX: number;
  labelY: number;
  /** arrowhead triangle, "x1,y1 x2,y2 x3,y3" */
  head: string;
  /** differs from (or is absent in) the previous quiver */
  changed: boolean;
  /** part of the colour-0 subquiver */
  gabriel: boolean;
}

export interface Scene {
  size: number;
  nodes: SceneNode[];
  arrows: SceneArrow[];
  legend: { colour: number; hue: number }[];
}

export const NODE_RADIUS = 17;

export function colourHue(colour: number, m: number): number {
  return Math.round((360 * colour) / (m + 1));
}

export function vertexPositions(n: number, size: number): SceneNode[] {
  const cx = size / 2;
  const cy = size / 2;
  const radius = size / 2 - 48;
  const nodes: SceneNode[] = [];
  for (let v = 0; v < n; v++) {
    const angle = (2 * Math.PI * v) / n - Math.PI / 2;
    nodes.push({
      id: v,
      x: Math.round(cx + radius * Math.cos(angle)),
      y: Math.round(cy + radius * Math.sin(angle)),
    });
  }
  return nodes;
}

function arrowKey(a: [number, number, number, number]): string {
  return `${a[0]},${a[1]},${a[2]}`;
}

export function buildScene(
  doc: QuiverDocument,
  prev: QuiverDocument | null = null,
  opts: { size?: number } = {},
): Scene {
  const size = opts.size ?? 480;
  const normalized = normalizeDoc(doc);
  const nodes = vertexPositions(normalized.vertices, size);
  const prevMult = new Map<string, number>();
  if (prev) {
    for (const arrow of normalizeDoc(prev).arrows) {
      prevMult.set(arrowKey(arrow), arrow[3]);
    }
  }

  // count arrows per unordered pair to spread their curvatures
  const pairSlots = new Map<string, number>();
  const slotOf = new Map<string, number>();
  for (const [from, to, colour] of normalized.arrows) {
    const pair = from < to ? `${from}:${to}` : `${to}:${from}`;
    const slot = pairSlots.get(pair) ?? 0;
    pairSlots.set(pair, slot + 1);
    slotOf.set(`${from},${to},${colour}`, slot);
  }

  const arrows: SceneArrow[] = [];
  for (const entry of normalized.arrows) {
    const [from, to, colour, mult] = entry;
    const a = nodes[from];
    const b = nodes[to];
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const dist = Math.hypot(dx, dy) || 1;
    const ux = dx / dist;
    const uy = dy / dist;
    // perpendicular; forward arrows bow one way, reverse arrows the other
    const px = -uy;
    const py = ux;
    const slot = slotOf.get(arrowKey(entry)) ?? 0;
    const bend = (from < to ? 1 : -1) * (20 + 16 * slot);
    const startX = a.x + ux * NODE_RADIUS;
    const startY = a.y + uy * NODE_RADIUS;
    const endX = b.x - ux * NODE_RADIUS;
    const endY = b.y - uy * NODE_RADIUS;
    const ctrlX = (startX + endX) / 2 + px * bend;
    const ctrlY = (startY + endY) / 2 + py * bend;
    // tangent at the endpoint of the quadratic bezier
    const tx = endX - ctrlX;
    const ty = endY - ctrlY;
    const tlen = Math.hypot(tx, ty) || 1;
    const hx = tx / tlen;
    const hy = ty / tlen;
    const headLength = 9;
    const headHalf = 4.5;
    const baseX = endX - hx * headLength;
    const baseY = endY - hy * headLength;
    const head = [
      `${r1(endX)},${r1(endY)}`,
      `${r1(baseX - hy * headHalf)},${r1(baseY + hx * headHalf)}`,
      `${r1(baseX + hy * headHalf)},${r1(baseY - hx * headHalf)}`,
    ].join(" ");
    arrows.push({
      from,
      to,
      colour,
      mult,
      hue: colourHue(colour, normalized.m),
      label: mult === 1 ? `(${colour})` : `(${colour}) x${mult}`,
      path: `M ${r1(startX)} ${r1(startY)} Q ${r1(ctrlX)} ${r1(ctrlY)} ${r1(endX)} ${r1(endY)}`,
      labelX: r1((startX + endX) / 2 + px * bend * 0.72),
      labelY: r1((startY + endY) / 2 + py * bend * 0.72),
      head,
      changed: prev !== null && prevMult.get(arrowKey(entry)) !== mult,
      gabriel: colour === 0,
    });
  }

  const legend = [];
  for (let colour = 0; colour <= normalized.m; colour++) {
    legend.push({ colour, hue: colourHue(colour, normalized.m) });
  }
  return { size, nodes, arrows, legend };
}

function r1(x: number): number {
  return Math.round(x * 10) / 10;
}
