/** Thin DOM layer: draws a Scene into an SVG element and wires clicks.
 * All logic lives in state.ts / scene.ts; this file only paints. */

import type { Scene } from "./scene.js";
import { NODE_RADIUS } from "./scene.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function el<K extends string>(name: K, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

export interface RenderOptions {
  highlightGabriel: boolean;
  onVertexClick: (vertex: number) => void;
}

export function renderScene(svg: SVGSVGElement, scene: Scene, opts: RenderOptions): void {
  svg.setAttribute("viewBox", `0 0 ${scene.size} ${scene.size}`);
  svg.replaceChildren();

  for (const arrow of scene.arrows) {
    const colour = `hsl(${arrow.hue} 75% 45%)`;
    const dimmed = opts.highlightGabriel && !arrow.gabriel;
    const group = el("g", { opacity: dimmed ? 0.25 : 1 });
    const shaft = el("path", {
      d: arrow.path,
      fill: "none",
      stroke: colour,
      "stroke-width": arrow.gabriel && opts.highlightGabriel ? 3 : 2,
    });
    if (arrow.changed) {
      shaft.setAttribute("stroke-dasharray", "6 3");
    }
    group.appendChild(shaft);
    group.appendChild(el("polygon", { points: arrow.head, fill: colour }));
    const label = el("text", {
      x: arrow.labelX,
      y: arrow.labelY,
      "text-anchor": "middle",
      "dominant-baseline": "middle",
      "font-size": 12,
      fill: colour,
    });
    label.textContent = arrow.label + (arrow.changed ? " *" : "");
    group.appendChild(label);
    svg.appendChild(group);
  }

  for (const node of scene.nodes) {
    const group = el("g", { cursor: "pointer" });
    group.addEventListener("click", () => opts.onVertexClick(node.id));
    const circle = el("circle", {
      cx: node.x,
      cy: node.y,
      r: NODE_RADIUS,
      fill: "#1d2733",
      stroke: "#7da7d9",
      "stroke-width": 2,
    });
    group.appendChild(circle);
    const label = el("text", {
      x: node.x,
      y: node.y + 1,
      "text-anchor": "middle",
      "dominant-baseline": "middle",
      "font-size": 14,
      fill: "#e8eef5",
    });
    label.textContent = String(node.id);
    group.appendChild(label);
    svg.appendChild(group);
  }
}

export function renderLegend(container: HTMLElement, scene: Scene): void {
  container.replaceChildren();
  for (const { colour, hue } of scene.legend) {
    const item = document.createElement("span");
    item.className = "legend-item";
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.background = `hsl(${hue} 75% 45%)`;
    item.appendChild(swatch);
    item.appendChild(document.createTextNode(`(${colour})`));
    container.appendChild(item);
  }
}
