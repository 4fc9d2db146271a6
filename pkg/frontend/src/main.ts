/** Browser wiring: URL-hash state, data fetching, and interaction handlers
 * around the pure scene renderer.  At most one pipeline fetch is applied
 * per parameter change; stale responses are dropped by generation number.
 */

import { ApiClient } from "./api.js";
import { lassoSelect, type Point } from "./lasso.js";
import { renderView } from "./scene.js";
import { decodeHash, defaultState, encodeHash, sanitize, type ViewState } from "./state.js";
import type { SceneData, SelectionDoc } from "./types.js";

export async function start(root: HTMLElement, api = new ApiClient()): Promise<void> {
  const datasets = await api.listDatasets();
  if (datasets.length === 0) {
    root.textContent = "no datasets available";
    return;
  }
  let state = decodeHash(location.hash, defaultState(datasets[0].id));
  if (!datasets.some((d) => d.id === state.datasetId)) {
    state = { ...state, datasetId: datasets[0].id };
  }
  const schema = () =>
    datasets.find((d) => d.id === state.datasetId)?.attributes ?? datasets[0].attributes;

  let generation = 0;
  let selectionDoc: SelectionDoc | null = null;
  let data: SceneData | null = null;

  async function refetch(): Promise<void> {
    const gen = ++generation;
    try {
      const [layout, tessellation, fracturedness] = await Promise.all([
        api.layout(state),
        api.tessellation(state),
        api.fracturedness(state),
      ]);
      if (gen !== generation) return; // stale response, a newer fetch won
      state = sanitize(state, schema().map((a) => a.name), layout.points.length);
      data = { schema: schema(), layout, tessellation, fracturedness, selection: selectionDoc, error: null };
    } catch (exc) {
      if (gen !== generation) return;
      data = data
        ? { ...data, error: String(exc) }
        : { schema: schema(), layout: { method: "", measure: null, stress: 0, points: [] },
            tessellation: { bounds: { x: 0, y: 0, w: 800, h: 600 }, cells: [], edges: [] },
            fracturedness: { attributes: [], rankingEdge: [] },
            selection: null, error: String(exc) };
    }
    draw();
  }

  function draw(): void {
    if (!data) return;
    renderView(root, state, { ...data, selection: selectionDoc });
    wire();
  }

  function setState(next: Partial<ViewState>, opts: { refetchData?: boolean } = {}): void {
    state = { ...state, ...next };
    history.replaceState(null, "", encodeHash(state));
    if (opts.refetchData) {
      selectionDoc = null;
      void refetch();
    } else {
      draw();
    }
  }

  function wire(): void {
    for (const section of root.querySelectorAll<HTMLElement>(".panel-attribute")) {
      const name = section.dataset.attribute ?? null;
      section.addEventListener("click", (ev) => {
        if ((ev as MouseEvent).shiftKey) {
          setState({ secondary: state.secondary === name ? null : name });
        } else {
          setState({ attribute: state.attribute === name ? null : name });
        }
      });
    }
    for (const glyph of root.querySelectorAll<SVGElement>(".glyph")) {
      const id = Number(glyph.getAttribute("data-id"));
      glyph.addEventListener("mouseenter", () => setState({ hover: id }));
      glyph.addEventListener("mouseleave", () => setState({ hover: null }));
    }
    const svg = root.querySelector<SVGSVGElement>("svg.map");
    if (svg) attachLasso(svg);
  }

  function attachLasso(svg: SVGSVGElement): void {
    let polygon: Point[] | null = null;
    const toLocal = (ev: MouseEvent): Point => {
      const rect = svg.getBoundingClientRect();
      const vb = svg.viewBox.baseVal;
      return [
        vb.x + ((ev.clientX - rect.left) / rect.width) * vb.width,
        vb.y + ((ev.clientY - rect.top) / rect.height) * vb.height,
      ];
    };
    svg.addEventListener("pointerdown", (ev) => {
      polygon = [toLocal(ev as MouseEvent)];
    });
    svg.addEventListener("pointermove", (ev) => {
      if (polygon) polygon.push(toLocal(ev as MouseEvent));
    });
    svg.addEventListener("pointerup", () => {
      if (!polygon) return;
      const ids = data ? lassoSelect(polygon, data.layout.points) : [];
      polygon = null;
      void applySelection(ids);
    });
  }

  async function applySelection(ids: number[]): Promise<void> {
    if (ids.length === 0) {
      selectionDoc = null;
      setState({ selection: [] });
      return; // empty lasso: clear locally, no request
    }
    try {
      selectionDoc = await api.postSelection(state, ids);
      setState({ selection: ids });
    } catch (exc) {
      if (data) data = { ...data, error: String(exc) };
      draw();
    }
  }

  window.addEventListener("hashchange", () => {
    state = decodeHash(location.hash, state);
    selectionDoc = null;
    void refetch();
  });

  await refetch();
  if (state.selection.length > 0) {
    await applySelection(state.selection); // replay shared selections
  }
}
