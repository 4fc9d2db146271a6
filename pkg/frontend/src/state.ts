/** Shareable view state, round-tripped through the URL hash. */

export const GLYPH_DESIGNS = [
  "area_square",
  "bar_square",
  "area_circle",
  "arc_circle",
] as const;

export type GlyphDesign = (typeof GLYPH_DESIGNS)[number];

export interface ViewState {
  datasetId: string;
  distance: string;
  method: "mds" | "mca";
  overlapReduction: boolean;
  seed: number;
  /** Background (cell color) attribute; null renders neutral grey. */
  attribute: string | null;
  /** Outline attribute; null draws no boundary outlines. */
  secondary: string | null;
  glyph: GlyphDesign;
  selection: number[];
  hover: number | null;
}

export function defaultState(datasetId = ""): ViewState {
  return {
    datasetId,
    distance: "overlap",
    method: "mds",
    overlapReduction: true,
    seed: 0,
    attribute: null,
    secondary: null,
    glyph: "area_square",
    selection: [],
    hover: null,
  };
}

export function encodeHash(state: ViewState): string {
  const q = new URLSearchParams();
  q.set("ds", state.datasetId);
  q.set("distance", state.distance);
  q.set("method", state.method);
  q.set("overlap", state.overlapReduction ? "1" : "0");
  q.set("seed", String(state.seed));
  if (state.attribute !== null) q.set("attr", state.attribute);
  if (state.secondary !== null) q.set("sec", state.secondary);
  q.set("glyph", state.glyph);
  if (state.selection.length > 0) q.set("sel", state.selection.join(","));
  if (state.hover !== null) q.set("hover", String(state.hover));
  return "#" + q.toString();
}

export function decodeHash(hash: string, fallback?: ViewState): ViewState {
  const base = fallback ?? defaultState();
  const raw = hash.startsWith("#") ? hash.slice(1) : hash;
  if (raw === "") return { ...base };
  const q = new URLSearchParams(raw);
  const method = q.get("method");
  const glyph = q.get("glyph");
  const seed = Number.parseInt(q.get("seed") ?? "", 10);
  const hover = Number.parseInt(q.get("hover") ?? "", 10);
  const selection = (q.get("sel") ?? "")
    .split(",")
    .filter((s) => s !== "")
    .map((s) => Number.parseInt(s, 10))
    .filter((n) => Number.isInteger(n) && n >= 0);
  return {
    datasetId: q.get("ds") ?? base.datasetId,
    distance: q.get("distance") ?? base.distance,
    method: method === "mds" || method === "mca" ? method : base.method,
    overlapReduction: q.has("overlap") ? q.get("overlap") === "1" : base.overlapReduction,
    seed: Number.isInteger(seed) ? seed : base.seed,
    attribute: q.get("attr"),
    secondary: q.get("sec"),
    glyph: (GLYPH_DESIGNS as readonly string[]).includes(glyph ?? "")
      ? (glyph as GlyphDesign)
      : base.glyph,
    selection: [...new Set(selection)].sort((a, b) => a - b),
    hover: Number.isInteger(hover) ? hover : null,
  };
}

/** Drop references the current dataset schema cannot satisfy. */
export function sanitize(state: ViewState, attributes: string[], nPoints: number): ViewState {
  return {
    ...state,
    attribute: state.attribute !== null && attributes.includes(state.attribute) ? state.attribute : null,
    secondary: state.secondary !== null && attributes.includes(state.secondary) ? state.secondary : null,
    selection: state.selection.filter((i) => i < nPoints),
    hover: state.hover !== null && state.hover < nPoints ? state.hover : null,
  };
}
