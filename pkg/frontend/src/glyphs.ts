/** Client-side glyph primitives, mirroring the server renderer's designs:
 * segmented squares (area- or bar-scaled) and segmented circles (area- or
 * arc-scaled). Coordinates are local to the glyph center.
 */

import { categoryColor } from "./palette.js";
import type { GlyphDesign } from "./state.js";

export const BASE_SIZE = 24;

export type Primitive =
  | { type: "rect"; x: number; y: number; w: number; h: number; fill: string }
  | { type: "wedge"; r: number; start: number; end: number; fill: string }
  | { type: "arc"; r: number; start: number; end: number; stroke: string; width: number };

/** Segments per row for a near-square grid with equal-area cells. */
function segmentGrid(nAttrs: number): number[] {
  const cols = Math.ceil(Math.sqrt(nAttrs));
  const rows = Math.ceil(nAttrs / cols);
  const counts: number[] = [];
  let remaining = nAttrs;
  for (let r = 0; r < rows; r++) {
    const take = Math.min(cols, remaining);
    counts.push(take);
    remaining -= take;
  }
  return counts;
}

export function glyphGeometry(
  categoryIndices: number[],
  relFreq: number,
  maxRelFreq: number,
  design: GlyphDesign,
  baseSize: number = BASE_SIZE,
): Primitive[] {
  const nAttrs = categoryIndices.length;
  const frac = relFreq / maxRelFreq;
  const prims: Primitive[] = [];

  if (design === "area_square" || design === "bar_square") {
    const side = design === "area_square" ? baseSize * Math.sqrt(frac) : baseSize;
    const counts = segmentGrid(nAttrs);
    let y = -side / 2;
    let attr = 0;
    for (const count of counts) {
      const rowH = (side * count) / nAttrs;
      const segW = side / count;
      for (let s = 0; s < count; s++) {
        prims.push({
          type: "rect",
          x: -side / 2 + s * segW,
          y,
          w: segW,
          h: rowH,
          fill: categoryColor(categoryIndices[attr]),
        });
        attr += 1;
      }
      y += rowH;
    }
    if (design === "bar_square") {
      const barH = baseSize * 0.15;
      prims.push({
        type: "rect",
        x: -side / 2,
        y: -side / 2 - barH * 1.4,
        w: side * frac,
        h: barH,
        fill: "#333333",
      });
    }
  } else {
    const radius =
      design === "area_circle" ? (baseSize / 2) * Math.sqrt(frac) : baseSize / 2;
    const sweep = (2 * Math.PI) / nAttrs;
    for (let a = 0; a < nAttrs; a++) {
      prims.push({
        type: "wedge",
        r: radius,
        start: -Math.PI / 2 + a * sweep,
        end: -Math.PI / 2 + (a + 1) * sweep,
        fill: categoryColor(categoryIndices[a]),
      });
    }
    if (design === "arc_circle") {
      prims.push({
        type: "arc",
        r: radius * 1.25,
        start: -Math.PI / 2,
        end: -Math.PI / 2 + 2 * Math.PI * frac,
        stroke: "#333333",
        width: baseSize * 0.08,
      });
    }
  }
  return prims;
}

export function wedgePath(r: number, a0: number, a1: number): string {
  const x0 = r * Math.cos(a0);
  const y0 = r * Math.sin(a0);
  const x1 = r * Math.cos(a1);
  const y1 = r * Math.sin(a1);
  const large = a1 - a0 > Math.PI ? 1 : 0;
  return `M 0 0 L ${x0} ${y0} A ${r} ${r} 0 ${large} 1 ${x1} ${y1} Z`;
}

export function arcPath(r: number, a0: number, a1: number): string {
  let end = a1;
  if (end - a0 >= 2 * Math.PI - 1e-9) end = a0 + 2 * Math.PI - 1e-4;
  const x0 = r * Math.cos(a0);
  const y0 = r * Math.sin(a0);
  const x1 = r * Math.cos(end);
  const y1 = r * Math.sin(end);
  const large = end - a0 > Math.PI ? 1 : 0;
  return `M ${x0} ${y0} A ${r} ${r} 0 ${large} 1 ${x1} ${y1}`;
}
