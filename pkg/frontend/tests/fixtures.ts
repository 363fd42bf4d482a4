import type { QuiverDocument } from "../src/types.js";

/** Linear A3 seed with m=2 and its first two mutations at vertex 0. */
export const A3_M2_SEED: QuiverDocument = {
  m: 2,
  vertices: 3,
  arrows: [[0, 1, 0, 1], [1, 0, 2, 1], [1, 2, 0, 1], [2, 1, 2, 1]],
};

export const A3_M2_MUT0: QuiverDocument = {
  m: 2,
  vertices: 3,
  arrows: [[0, 1, 2, 1], [1, 0, 0, 1], [1, 2, 0, 1], [2, 1, 2, 1]],
};

export const A3_M2_MUT00: QuiverDocument = {
  m: 2,
  vertices: 3,
  arrows: [[0, 1, 1, 1], [1, 0, 1, 1], [1, 2, 0, 1], [2, 1, 2, 1]],
};

export const TWO_VERTEX_M3: QuiverDocument = {
  m: 3,
  vertices: 2,
  arrows: [[0, 1, 0, 2], [1, 0, 3, 2]],
};

export const WILD3_M1: QuiverDocument = {
  m: 1,
  vertices: 3,
  arrows: [[0, 1, 0, 3], [1, 0, 1, 3], [1, 2, 0, 3], [2, 1, 1, 3]],
};

export const INVALID_DOC: QuiverDocument = {
  m: 2,
  vertices: 2,
  arrows: [[0, 1, 0, 1]],
};
