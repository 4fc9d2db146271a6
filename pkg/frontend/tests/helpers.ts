/** Shared fixture loading for the UI tests.
 *
 * All JSON under fixtures/ was captured verbatim from the running Python
 * service on the seeded Titanic dataset, so the tests exercise the real
 * wire contract without a live server.
 */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type {
  DatasetEntry,
  FracturednessDoc,
  LayoutDoc,
  SceneData,
  SelectionDoc,
  TessellationDoc,
} from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

function load<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8")) as T;
}

export const datasets = load<DatasetEntry[]>("datasets.json");
export const layout = load<LayoutDoc>("layout.json");
export const tessellation = load<TessellationDoc>("tessellation.json");
export const fracturedness = load<FracturednessDoc>("fracturedness.json");
export const selectionMaleAdultNo = load<SelectionDoc>("selection_male_adult_no.json");

export function sceneData(overrides: Partial<SceneData> = {}): SceneData {
  return {
    schema: datasets[0].attributes,
    layout,
    tessellation,
    fracturedness,
    selection: null,
    error: null,
    ...overrides,
  };
}
