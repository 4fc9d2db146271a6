/** Pure scene construction: (ViewState, fetched data) -> DOM.
 *
 * Everything analytic (fracturedness, common categories, frequencies)
 * comes straight from service JSON; this module only draws it.  Re-running
 * with equal inputs produces an identical tree, which is what makes URL
 * state replay exact.
 */

import { arcPath, glyphGeometry, wedgePath } from "./glyphs.js";
import { NEUTRAL_CELL, cellColor } from "./palette.js";
import type { ViewState } from "./state.js";
import type { AttributeSchemaEntry, SceneData } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl(doc: Document, tag: string, attrs: Record<string, string>): SVGElement {
  const node = doc.createElementNS(SVG_NS, tag) as SVGElement;
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

function div(doc: Document, className: string, text?: string): HTMLDivElement {
  const node = doc.createElement("div");
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function categoryIndex(schema: AttributeSchemaEntry[], attr: string, category: string): number {
  const entry = schema.find((a) => a.name === attr);
  if (!entry) return 0;
  const idx = entry.categories.indexOf(category);
  return idx >= 0 ? idx : 0;
}

/** Shared polygon edge between two adjacent cells, if any. */
export function sharedSegment(
  a: [number, number][],
  b: [number, number][],
  tol = 1e-7,
): [[number, number], [number, number]] | null {
  const same = (p: [number, number], q: [number, number]) =>
    Math.abs(p[0] - q[0]) < tol && Math.abs(p[1] - q[1]) < tol;
  for (let i = 0; i < a.length; i++) {
    const a0 = a[i];
    const a1 = a[(i + 1) % a.length];
    for (let j = 0; j < b.length; j++) {
      const b0 = b[j];
      const b1 = b[(j + 1) % b.length];
      if ((same(a0, b0) && same(a1, b1)) || (same(a0, b1) && same(a1, b0))) {
        return [a0, a1];
      }
    }
  }
  return null;
}

function renderMap(doc: Document, state: ViewState, data: SceneData): SVGElement {
  const { layout, tessellation, schema } = data;
  const b = tessellation.bounds;
  const svg = svgEl(doc, "svg", {
    class: "map",
    viewBox: `${b.x} ${b.y} ${b.w} ${b.h}`,
    width: String(b.w),
    height: String(b.h),
  });
  const byId = new Map(layout.points.map((p) => [p.id, p]));

  const background = svgEl(doc, "g", { id: "background" });
  for (const cell of tessellation.cells) {
    const point = byId.get(cell.id);
    let fill = NEUTRAL_CELL;
    if (state.attribute !== null && point) {
      const category = point.assignment[state.attribute];
      fill = cellColor(categoryIndex(schema, state.attribute, category));
    }
    background.appendChild(
      svgEl(doc, "polygon", {
        id: `cell-${cell.id}`,
        class: "cell",
        points: cell.polygon.map(([x, y]) => `${x},${y}`).join(" "),
        fill,
        stroke: "#ffffff",
        "stroke-width": "1",
      }),
    );
  }
  svg.appendChild(background);

  const outlines = svgEl(doc, "g", { id: "outlines" });
  if (state.secondary !== null) {
    const polygons = new Map(tessellation.cells.map((c) => [c.id, c.polygon]));
    for (const [i, j] of data.tessellation.edges) {
      const pi = byId.get(i);
      const pj = byId.get(j);
      if (!pi || !pj) continue;
      if (pi.assignment[state.secondary] === pj.assignment[state.secondary]) continue;
      const seg = sharedSegment(polygons.get(i) ?? [], polygons.get(j) ?? []);
      if (!seg) continue;
      outlines.appendChild(
        svgEl(doc, "line", {
          class: "outline",
          x1: String(seg[0][0]),
          y1: String(seg[0][1]),
          x2: String(seg[1][0]),
          y2: String(seg[1][1]),
          stroke: "#222222",
          "stroke-width": "2.5",
        }),
      );
    }
  }
  svg.appendChild(outlines);

  const glyphs = svgEl(doc, "g", { id: "glyphs" });
  const attrOrder = schema.map((a) => a.name);
  const total = layout.points.reduce((s, p) => s + p.count, 0);
  const maxRel = Math.max(...layout.points.map((p) => p.count / total));
  const selected = new Set(data.selection?.selected ?? state.selection);
  const matching = new Set(data.selection?.matching ?? []);
  const order = [...layout.points].sort((a, c) => c.count - a.count || a.id - c.id);
  // hovered glyph is re-appended last so it sits on top
  const hovered = order.find((p) => p.id === state.hover);
  const drawOrder = hovered ? [...order.filter((p) => p !== hovered), hovered] : order;
  for (const p of drawOrder) {
    const classes = ["glyph"];
    if (selected.has(p.id)) classes.push("selected");
    else if (matching.has(p.id)) classes.push("matching");
    if (p.id === state.hover) classes.push("hovered");
    const g = svgEl(doc, "g", {
      id: `glyph-${p.id}`,
      class: classes.join(" "),
      transform: `translate(${p.x},${p.y})`,
      "data-id": String(p.id),
    });
    const indices = attrOrder.map((a) => categoryIndex(schema, a, p.assignment[a]));
    for (const prim of glyphGeometry(indices, p.count / total, maxRel, state.glyph)) {
      if (prim.type === "rect") {
        g.appendChild(
          svgEl(doc, "rect", {
            x: String(prim.x),
            y: String(prim.y),
            width: String(prim.w),
            height: String(prim.h),
            fill: prim.fill,
          }),
        );
      } else if (prim.type === "wedge") {
        g.appendChild(svgEl(doc, "path", { d: wedgePath(prim.r, prim.start, prim.end), fill: prim.fill }));
      } else {
        g.appendChild(
          svgEl(doc, "path", {
            d: arcPath(prim.r, prim.start, prim.end),
            fill: "none",
            stroke: prim.stroke,
            "stroke-width": String(prim.width),
          }),
        );
      }
    }
    glyphs.appendChild(g);
  }
  svg.appendChild(glyphs);
  return svg;
}

function renderTooltip(doc: Document, state: ViewState, data: SceneData): HTMLElement | null {
  if (state.hover === null) return null;
  const point = data.layout.points.find((p) => p.id === state.hover);
  if (!point) return null;
  const tip = div(doc, "tooltip");
  tip.style.left = `${point.x}px`;
  tip.style.top = `${point.y}px`;
  for (const attr of data.schema) {
    tip.appendChild(div(doc, "tooltip-line", `${attr.name}=${point.assignment[attr.name]}`));
  }
  tip.appendChild(div(doc, "tooltip-count", `${point.count} rows`));
  return tip;
}

function renderPanel(doc: Document, state: ViewState, data: SceneData): HTMLElement {
  const panel = div(doc, "panel");

  if (data.selection) {
    const common = div(doc, "panel-selection");
    common.appendChild(div(doc, "panel-heading", "common categories"));
    if (data.selection.common.length === 0) {
      common.appendChild(div(doc, "common-empty", "none"));
    }
    for (const entry of data.selection.common) {
      // service orders these by fracturedness already; keep that order
      common.appendChild(div(doc, "common-category", `${entry.attribute}=${entry.category}`));
    }
    common.appendChild(
      div(doc, "panel-note", `${data.selection.matching.length} matching subsets`),
    );
    panel.appendChild(common);
  }

  const byName = new Map(data.fracturedness.attributes.map((a) => [a.name, a]));
  for (const name of data.fracturedness.rankingEdge) {
    const attr = byName.get(name);
    if (!attr) continue;
    const section = div(doc, "panel-attribute");
    section.dataset.attribute = name;
    if (name === state.attribute) section.classList.add("primary");
    if (name === state.secondary) section.classList.add("secondary");
    section.appendChild(
      div(doc, "panel-heading", `${name} (F_edge ${attr.fEdge.toFixed(2)})`),
    );
    const cats = [...attr.categories].sort((a, b) => a.fComp - b.fComp);
    for (const cat of cats) {
      const row = div(doc, "panel-category");
      row.appendChild(div(doc, "panel-category-name", cat.name));
      const bar = div(doc, "fcomp-bar");
      bar.style.width = `${Math.round(cat.fComp * 100)}%`;
      bar.title = `f_comp ${cat.fComp.toFixed(3)} (${cat.components} regions)`;
      row.appendChild(bar);
      section.appendChild(row);
    }
    panel.appendChild(section);
  }
  return panel;
}

/** Build the whole scene under `root`, replacing any previous content. */
export function renderView(root: HTMLElement, state: ViewState, data: SceneData): void {
  const doc = root.ownerDocument;
  root.replaceChildren();

  if (data.error !== null) {
    root.appendChild(div(doc, "banner", data.error));
  }
  const stage = div(doc, "stage");
  stage.appendChild(renderMap(doc, state, data));
  const tooltip = renderTooltip(doc, state, data);
  if (tooltip) stage.appendChild(tooltip);
  root.appendChild(stage);
  root.appendChild(renderPanel(doc, state, data));
}
