/** Explorer entry point: load a quiver, click vertices to mutate, watch
 * the verdict and the census grow.  Clicks queue so at most one mutation
 * request is in flight. */

import { ApiClient } from "./api.js";
import { renderLegend, renderScene } from "./dom.js";
import { buildScene } from "./scene.js";
import {
  canRedo,
  canUndo,
  clickVertex,
  historyVertices,
  loadAndClassify,
  redo,
  undo,
  verifyReplay,
  type ExplorerState,
} from "./state.js";
import type { QuiverDocument } from "./types.js";

const PRESETS: Record<string, QuiverDocument> = {
  "A3, m=2": {
    m: 2,
    vertices: 3,
    arrows: [[0, 1, 0, 1], [1, 0, 2, 1], [1, 2, 0, 1], [2, 1, 2, 1]],
  },
  "A4, m=1": {
    m: 1,
    vertices: 4,
    arrows: [
      [0, 1, 0, 1], [1, 0, 1, 1], [1, 2, 0, 1], [2, 1, 1, 1], [2, 3, 0, 1], [3, 2, 1, 1],
    ],
  },
  "Kronecker, m=3": {
    m: 3,
    vertices: 2,
    arrows: [[0, 1, 0, 2], [1, 0, 3, 2]],
  },
  "wild triple, m=1": {
    m: 1,
    vertices: 3,
    arrows: [[0, 1, 0, 3], [1, 0, 1, 3], [1, 2, 0, 3], [2, 1, 1, 3]],
  },
};

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function main(): void {
  const api = new ApiClient("");
  const svg = byId<HTMLElement>("quiver") as unknown as SVGSVGElement;
  const input = byId<HTMLTextAreaElement>("doc-input");
  const presetSelect = byId<HTMLSelectElement>("preset");
  const status = byId<HTMLDivElement>("status");
  const verdictBox = byId<HTMLDivElement>("verdict");
  const censusBox = byId<HTMLDivElement>("census");
  const historyBox = byId<HTMLDivElement>("history");
  const errorBox = byId<HTMLDivElement>("error");
  const legendBox = byId<HTMLDivElement>("legend");
  const gabrielToggle = byId<HTMLInputElement>("gabriel-toggle");

  let state: ExplorerState | null = null;
  let previous: QuiverDocument | null = null;
  let queue: Promise<void> = Promise.resolve();

  for (const name of Object.keys(PRESETS)) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    presetSelect.appendChild(option);
  }
  presetSelect.addEventListener("change", () => {
    const preset = PRESETS[presetSelect.value];
    if (preset) input.value = JSON.stringify(preset);
  });
  input.value = JSON.stringify(PRESETS["A3, m=2"]);

  function paint(): void {
    if (!state) return;
    const scene = buildScene(state.current, previous);
    renderScene(svg, scene, {
      highlightGabriel: gabrielToggle.checked,
      onVertexClick: (vertex) => enqueue(() => handleClick(vertex)),
    });
    renderLegend(legendBox, scene);
    const verdict = state.verdict;
    verdictBox.textContent = verdict
      ? `${verdict.tag} — ${verdict.reason}`
      : "unclassified";
    verdictBox.dataset.tag = verdict?.tag ?? "";
    censusBox.textContent =
      `${state.census.size} distinct quiver${state.census.size === 1 ? "" : "s"} seen` +
      (verdict?.tag === "Infinite" ? " (class is unbounded)" : "");
    historyBox.textContent = state.history.length
      ? `clicks: ${historyVertices(state).join(" → ")}`
      : "no mutations yet";
    errorBox.textContent = state.error ?? "";
    status.textContent = state.cycleClosed
      ? `cycle closed: ${state.current.m + 1} clicks returned to the same quiver`
      : "";
    byId<HTMLButtonElement>("undo").disabled = !canUndo(state);
    byId<HTMLButtonElement>("redo").disabled = !canRedo(state);
  }

  async function handleClick(vertex: number): Promise<void> {
    if (!state) return;
    const before = state.current;
    state = await clickVertex(api, state, vertex);
    previous = state.error === null ? before : previous;
    paint();
  }

  function enqueue(task: () => Promise<void>): void {
    queue = queue.then(task).catch((err) => {
      errorBox.textContent = String(err);
    });
  }

  byId<HTMLButtonElement>("load").addEventListener("click", () =>
    enqueue(async () => {
      let doc: QuiverDocument;
      try {
        doc = JSON.parse(input.value);
      } catch (err) {
        errorBox.textContent = `bad JSON: ${err}`;
        return;
      }
      try {
        state = await loadAndClassify(api, doc);
        previous = null;
        if (state.violations.length) {
          errorBox.textContent = state.violations
            .map((v) => `property (${v.property}) at arrows ${v.from}->${v.to} colour ${v.colour}`)
            .join("; ");
        }
        paint();
      } catch (err) {
        errorBox.textContent = String(err);
      }
    }),
  );

  byId<HTMLButtonElement>("undo").addEventListener("click", () =>
    enqueue(async () => {
      if (state) {
        state = undo(state);
        previous = null;
        paint();
      }
    }),
  );
  byId<HTMLButtonElement>("redo").addEventListener("click", () =>
    enqueue(async () => {
      if (state) {
        state = redo(state);
        previous = null;
        paint();
      }
    }),
  );
  byId<HTMLButtonElement>("verify").addEventListener("click", () =>
    enqueue(async () => {
      if (!state) return;
      const ok = await verifyReplay(api, state);
      status.textContent = ok
        ? "replay verified: history reproduces the displayed quiver"
        : "replay MISMATCH — this is a bug";
    }),
  );
  gabrielToggle.addEventListener("change", paint);

  void api.health().then((up) => {
    if (!up) errorBox.textContent = "service unreachable — start it with: colourq serve";
  });
}

main();
