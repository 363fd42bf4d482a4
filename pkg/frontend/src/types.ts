/** Wire types shared with the HTTP service. */

/** Arrow entry: [from, to, colour, multiplicity]. */
export type ArrowEntry = [number, number, number, number];

export interface QuiverDocument {
  m: number;
  vertices: number;
  arrows: ArrowEntry[];
}

export interface Violation {
  property: number;
  from: number;
  to: number;
  colour: number;
}

export interface FinitenessVerdict {
  tag: "Finite" | "Infinite" | "Unknown";
  reason: string;
  witness: QuiverDocument | null;
}

export interface GabrielDocument {
  vertices: number;
  arrows: [number, number, number][];
}

export interface ValidateResult {
  valid: boolean;
  violations: Violation[];
  canonical: string;
}

export interface MutateResult {
  quiver: QuiverDocument;
  canonical: string;
}

export interface EnumerateResult {
  status: "Complete" | "BoundExceeded";
  size: number;
  depth_reached: number;
  representatives: { quiver: QuiverDocument; canonical: string }[];
  next: string | null;
}

/** Normalized copy with only the schema fields, arrows sorted the way the
 * service emits them, so deep equality via JSON.stringify is reliable. */
export function normalizeDoc(doc: QuiverDocument): QuiverDocument {
  const arrows = doc.arrows
    .map((a) => [a[0], a[1], a[2], a[3]] as ArrowEntry)
    .sort((a, b) => a[0] - b[0] || a[1] - b[1] || a[2] - b[2]);
  return { m: doc.m, vertices: doc.vertices, arrows };
}

export function docsEqual(a: QuiverDocument, b: QuiverDocument): boolean {
  return JSON.stringify(normalizeDoc(a)) === JSON.stringify(normalizeDoc(b));
}
