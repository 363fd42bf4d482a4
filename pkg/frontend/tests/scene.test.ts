/** Pure scene geometry: layout stability, hues, offsets, change flags. */

import { describe, expect, it } from "vitest";

import { buildScene, colourHue, vertexPositions } from "../src/scene.js";
import { A3_M2_MUT0, A3_M2_SEED } from "./fixtures.js";

describe("colour hues", () => {
  it("spaces hues evenly over m+1 colours", () => {
    expect(colourHue(0, 2)).toBe(0);
    expect(colourHue(1, 2)).toBe(120);
    expect(colourHue(2, 2)).toBe(240);
    expect(colourHue(3, 3)).toBe(270);
  });
});

describe("layout", () => {
  it("is fixed and circular by vertex index", () => {
    const first = vertexPositions(4, 480);
    const second = vertexPositions(4, 480);
    expect(first).toEqual(second);
    expect(first[0].y).toBeLessThan(first[2].y); // vertex 0 starts at the top
    const cx = 480 / 2;
    for (const node of first) {
      const r = Math.hypot(node.x - cx, node.y - cx);
      expect(Math.abs(r - (240 - 48))).toBeLessThan(1.5);
    }
  });
});

describe("buildScene", () => {
  it("draws one labeled arrow per document entry", () => {
    const scene = buildScene(A3_M2_SEED);
    expect(scene.nodes.length).toBe(3);
    expect(scene.arrows.length).toBe(4);
    expect(scene.arrows.map((a) => a.label).sort()).toEqual(
      ["(0)", "(0)", "(2)", "(2)"],
    );
    expect(scene.legend.map((l) => l.colour)).toEqual([0, 1, 2]);
  });

  it("flags the colour-0 subquiver", () => {
    const scene = buildScene(A3_M2_SEED);
    const gab = scene.arrows.filter((a) => a.gabriel);
    expect(gab.map((a) => [a.from, a.to])).toEqual([[0, 1], [1, 2]]);
  });

  it("separates opposite arrows of a pair", () => {
    const scene = buildScene(A3_M2_SEED);
    const forward = scene.arrows.find((a) => a.from === 0 && a.to === 1)!;
    const backward = scene.arrows.find((a) => a.from === 1 && a.to === 0)!;
    expect(forward.path).not.toBe(backward.path);
    expect(forward.labelX !== backward.labelX || forward.labelY !== backward.labelY).toBe(true);
  });

  it("shows multiplicities in labels", () => {
    const scene = buildScene({
      m: 1,
      vertices: 2,
      arrows: [[0, 1, 0, 3], [1, 0, 1, 3]],
    });
    expect(scene.arrows.map((a) => a.label).sort()).toEqual(["(0) x3", "(1) x3"]);
  });

  it("marks arrows that changed relative to the previous quiver", () => {
    const scene = buildScene(A3_M2_MUT0, A3_M2_SEED);
    const changed = scene.arrows.filter((a) => a.changed);
    // mutation at 0 recoloured both arrows between 0 and 1
    expect(changed.map((a) => [a.from, a.to]).sort()).toEqual([[0, 1], [1, 0]]);
    const untouched = buildScene(A3_M2_SEED, A3_M2_SEED);
    expect(untouched.arrows.every((a) => !a.changed)).toBe(true);
  });

  it("includes arrowheads pointing at the target", () => {
    const scene = buildScene(A3_M2_SEED);
    for (const arrow of scene.arrows) {
      const target = scene.nodes[arrow.to];
      const [tip] = arrow.head.split(" ");
      const [tx, ty] = tip.split(",").map(Number);
      const d = Math.hypot(tx - target.x, ty - target.y);
      expect(d).toBeLessThan(30); // tip sits at the node boundary
    }
  });
});
