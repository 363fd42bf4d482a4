/** Explorer session state and its transitions.
 *
 * The explorer never mutates quivers locally: every displayed quiver came
 * from the service, and the recorded history replayed through
 * /api/mutate_seq must reproduce the current quiver exactly.  Transitions
 * return fresh state objects so the DOM layer can re-render from scratch.
 */

import { ApiClient, ApiRequestError } from "./api.js";
import {
  docsEqual,
  normalizeDoc,
  type FinitenessVerdict,
  type QuiverDocument,
  type Violation,
} from "./types.js";

export interface HistoryEntry {
  vertex: number;
  quiver: QuiverDocument;
  canonical: string;
}

export interface ExplorerState {
  /** Quiver the session started from (history replays on top of it). */
  initial: QuiverDocument;
  current: QuiverDocument;
  history: HistoryEntry[];
  redoStack: HistoryEntry[];
  /** Canonical keys of every quiver seen this session. */
  census: Set<string>;
  verdict: FinitenessVerdict | null;
  violations: Violation[];
  /** Last request failure, shown inline; cleared by the next success. */
  error: string | null;
  /** True when the last m+1 clicks hit one vertex and closed a cycle. */
  cycleClosed: boolean;
}

export async function loadAndClassify(
  api: ApiClient,
  doc: QuiverDocument,
  opts: { max?: number } = {},
): Promise<ExplorerState> {
  const quiver = normalizeDoc(doc);
  const validation = await api.validate(quiver);
  const state: ExplorerState = {
    initial: quiver,
    current: quiver,
    history: [],
    redoStack: [],
    census: new Set(validation.valid ? [validation.canonical] : []),
    verdict: null,
    violations: validation.violations,
    error: null,
    cycleClosed: false,
  };
  if (!validation.valid) {
    state.error = "quiver violates structural properties";
    return state;
  }
  state.verdict = await api.classify(quiver, opts.max);
  return state;
}

export async function clickVertex(
  api: ApiClient,
  state: ExplorerState,
  vertex: number,
): Promise<ExplorerState> {
  let mutated;
  try {
    mutated = await api.mutate(state.current, vertex);
  } catch (err) {
    if (err instanceof ApiRequestError) {
      // surface the failure without touching history or current
      return { ...state, error: `${err.code}: ${err.message}` };
    }
    throw err;
  }
  const entry: HistoryEntry = {
    vertex,
    quiver: mutated.quiver,
    canonical: mutated.canonical,
  };
  const next: ExplorerState = {
    ...state,
    current: mutated.quiver,
    history: [...state.history, entry],
    redoStack: [],
    census: new Set(state.census).add(mutated.canonical),
    error: null,
    cycleClosed: false,
  };
  next.cycleClosed = detectClosedCycle(next);
  return next;
}

/** True when the last m+1 history entries mutate one vertex and land back
 * on the quiver that preceded them exactly. */
export function detectClosedCycle(state: ExplorerState): boolean {
  const period = state.current.m + 1;
  const n = state.history.length;
  if (n < period) {
    return false;
  }
  const tail = state.history.slice(n - period);
  if (!tail.every((entry) => entry.vertex === tail[0].vertex)) {
    return false;
  }
  const before =
    n === period ? state.initial : state.history[n - period - 1].quiver;
  return docsEqual(before, state.current);
}

export function canUndo(state: ExplorerState): boolean {
  return state.history.length > 0;
}

export function canRedo(state: ExplorerState): boolean {
  return state.redoStack.length > 0;
}

export function undo(state: ExplorerState): ExplorerState {
  if (!canUndo(state)) {
    return state;
  }
  const history = state.history.slice(0, -1);
  const popped = state.history[state.history.length - 1];
  const next: ExplorerState = {
    ...state,
    current: history.length ? history[history.length - 1].quiver : state.initial,
    history,
    redoStack: [...state.redoStack, popped],
    error: null,
    cycleClosed: false,
  };
  next.cycleClosed = detectClosedCycle(next);
  return next;
}

export function redo(state: ExplorerState): ExplorerState {
  if (!canRedo(state)) {
    return state;
  }
  const entry = state.redoStack[state.redoStack.length - 1];
  const next: ExplorerState = {
    ...state,
    current: entry.quiver,
    history: [...state.history, entry],
    redoStack: state.redoStack.slice(0, -1),
    error: null,
    cycleClosed: false,
  };
  next.cycleClosed = detectClosedCycle(next);
  return next;
}

export function historyVertices(state: ExplorerState): number[] {
  return state.history.map((entry) => entry.vertex);
}

/** Replay the recorded clicks on the initial quiver through the service
 * and compare with the displayed quiver. */
export async function verifyReplay(
  api: ApiClient,
  state: ExplorerState,
): Promise<boolean> {
  const replayed = await api.mutateSeq(state.initial, historyVertices(state));
  return docsEqual(replayed.quiver, state.current);
}
