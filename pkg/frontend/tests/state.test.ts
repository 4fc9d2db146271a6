import { describe, expect, it } from "vitest";

import { decodeHash, defaultState, encodeHash, sanitize, type ViewState } from "../src/state.js";

const full: ViewState = {
  datasetId: "791e1834a6c576d8",
  distance: "jaccard",
  method: "mca",
  overlapReduction: false,
  seed: 7,
  attribute: "Sex",
  secondary: "Survived",
  glyph: "arc_circle",
  selection: [2, 3, 5],
  hover: 4,
};

describe("url hash codec", () => {
  it("round-trips a fully populated state", () => {
    expect(decodeHash(encodeHash(full))).toEqual(full);
  });

  it("round-trips null attributes and empty selection", () => {
    const state = defaultState("abc");
    expect(decodeHash(encodeHash(state))).toEqual(state);
  });

  it("falls back to defaults on an empty hash", () => {
    expect(decodeHash("", defaultState("xyz"))).toEqual(defaultState("xyz"));
  });

  it("rejects junk values field by field", () => {
    const decoded = decodeHash("#method=tsne&glyph=blob&seed=NaN&sel=1,x,-4,2&hover=");
    expect(decoded.method).toBe("mds");
    expect(decoded.glyph).toBe("area_square");
    expect(decoded.seed).toBe(0);
    expect(decoded.selection).toEqual([1, 2]);
    expect(decoded.hover).toBeNull();
  });

  it("deduplicates and sorts the selection", () => {
    expect(decodeHash("#sel=5,2,5,2").selection).toEqual([2, 5]);
  });
});

describe("sanitize", () => {
  it("drops attributes missing from the schema and out-of-range ids", () => {
    const dirty = { ...full, attribute: "Nope", selection: [2, 99], hover: 99 };
    const clean = sanitize(dirty, ["Class", "Sex", "Age", "Survived"], 24);
    expect(clean.attribute).toBeNull();
    expect(clean.secondary).toBe("Survived");
    expect(clean.selection).toEqual([2]);
    expect(clean.hover).toBeNull();
  });
});
