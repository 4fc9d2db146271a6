/** Thin typed client for the map service; the UI's only data source. */

import type { ViewState } from "./state.js";
import type {
  DatasetEntry,
  FracturednessDoc,
  LayoutDoc,
  SelectionDoc,
  TessellationDoc,
} from "./types.js";

export function pipelineQuery(state: ViewState): string {
  const q = new URLSearchParams({
    distance: state.distance,
    method: state.method,
    overlap: state.overlapReduction ? "true" : "false",
    seed: String(state.seed),
  });
  return q.toString();
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async getJson<T>(path: string): Promise<T> {
    const resp = await this.fetchFn(this.base + path);
    if (!resp.ok) throw new Error(`${path}: HTTP ${resp.status}`);
    return (await resp.json()) as T;
  }

  listDatasets(): Promise<DatasetEntry[]> {
    return this.getJson("/datasets");
  }

  layout(state: ViewState): Promise<LayoutDoc> {
    return this.getJson(`/datasets/${state.datasetId}/layout?${pipelineQuery(state)}`);
  }

  tessellation(state: ViewState): Promise<TessellationDoc> {
    return this.getJson(`/datasets/${state.datasetId}/tessellation?${pipelineQuery(state)}`);
  }

  fracturedness(state: ViewState): Promise<FracturednessDoc> {
    return this.getJson(`/datasets/${state.datasetId}/fracturedness?${pipelineQuery(state)}`);
  }

  async postSelection(state: ViewState, ids: number[]): Promise<SelectionDoc> {
    const path = `/datasets/${state.datasetId}/selection?${pipelineQuery(state)}`;
    const resp = await this.fetchFn(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ ids }),
    });
    if (!resp.ok) throw new Error(`${path}: HTTP ${resp.status}`);
    return (await resp.json()) as SelectionDoc;
  }
}
