/** Wire types mirroring the JSON documents served by the HTTP API. */

export interface LayoutPoint {
  id: number;
  x: number;
  y: number;
  r: number;
  count: number;
  assignment: Record<string, string>;
}

export interface LayoutDoc {
  method: string;
  measure: string | null;
  stress: number;
  points: LayoutPoint[];
}

export interface TessellationDoc {
  bounds: { x: number; y: number; w: number; h: number };
  cells: { id: number; polygon: [number, number][] }[];
  edges: [number, number][];
}

export interface CategoryFrac {
  name: string;
  components: number;
  fComp: number;
}

export interface AttributeFrac {
  name: string;
  fEdge: number;
  fComp: number;
  omega: number;
  categories: CategoryFrac[];
}

export interface FracturednessDoc {
  attributes: AttributeFrac[];
  rankingEdge: string[];
}

export interface SelectionDoc {
  selected: number[];
  common: { attribute: string; category: string }[];
  distinct: string[];
  matching: number[];
}

export interface AttributeSchemaEntry {
  name: string;
  categories: string[];
}

export interface DatasetEntry {
  id: string;
  name: string;
  rows: number;
  subsets: number;
  attributes: AttributeSchemaEntry[];
}

/** Everything the scene needs, fetched for one parameter tuple. */
export interface SceneData {
  schema: AttributeSchemaEntry[];
  layout: LayoutDoc;
  tessellation: TessellationDoc;
  fracturedness: FracturednessDoc;
  selection: SelectionDoc | null;
  error: string | null;
}
