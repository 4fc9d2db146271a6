"""Static SVG maps: Voronoi background, secondary-attribute outlines, and
the four subset glyph designs.

Output is deterministic byte-for-byte for fixed inputs: floats are
formatted with fixed precision and all iteration orders are explicit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import DataError, SubsetTable
from .geometry import DelaunayGraph, VoronoiPartition, shared_boundary
from .projection import Layout

GLYPH_DESIGNS = ("area_square", "bar_square", "area_circle", "arc_circle")

# d3.schemeCategory10
CATEGORY10 = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


@dataclass(frozen=True)
class GlyphSpec:
    design: str = "area_square"
    base_size: float = 24.0

    def __post_init__(self):
        if self.design not in GLYPH_DESIGNS:
            raise DataError(f"unknown glyph design {self.design!r}")
        if self.base_size <= 0:
            raise DataError("base_size must be positive")


@dataclass(frozen=True)
class Palette:
    colors: tuple[str, ...] = CATEGORY10
    lighten: float = 0.4  # background mix fraction toward white

    def color(self, category_index: int) -> str:
        return self.colors[category_index % len(self.colors)]

    def background_color(self, category_index: int) -> str:
        return lighten_hex(self.color(category_index), self.lighten)


def lighten_hex(color: str, fraction: float) -> str:
    r, g, b = (int(color[i : i + 2], 16) for i in (1, 3, 5))
    mix = lambda v: round(v + (255 - v) * fraction)
    return f"#{mix(r):02x}{mix(g):02x}{mix(b):02x}"


def _segment_grid(n_attrs: int):
    """Row layout for square glyph segments: near-square grid, row heights
    proportional to the number of segments in the row so all areas match."""
    cols = math.ceil(math.sqrt(n_attrs))
    rows = math.ceil(n_attrs / cols)
    counts = []
    remaining = n_attrs
    for _ in range(rows):
        take = min(cols, remaining)
        counts.append(take)
        remaining -= take
    return counts


def glyph_geometry(
    assignment: tuple[int, ...],
    rel_freq: float,
    max_rel_freq: float,
    spec: GlyphSpec,
    palette: Palette = Palette(),
) -> list[dict]:
    """Drawable primitives (local coordinates, glyph centered at origin).

    Area designs scale the linear dimension by sqrt(rel/max) so glyph
    area is proportional to subset size; bar/arc designs keep a fixed
    footprint and fill an indicator instead.
    """
    if rel_freq <= 0:
        raise DataError("relative frequency must be positive")
    n_attrs = len(assignment)
    frac = rel_freq / max_rel_freq
    prims: list[dict] = []

    if spec.design in ("area_square", "bar_square"):
        side = spec.base_size * math.sqrt(frac) if spec.design == "area_square" else spec.base_size
        counts = _segment_grid(n_attrs)
        y = -side / 2
        attr = 0
        for count in counts:
            row_h = side * count / n_attrs
            seg_w = side / count
            for s in range(count):
                prims.append(
                    {
                        "type": "rect",
                        "x": -side / 2 + s * seg_w,
                        "y": y,
                        "w": seg_w,
                        "h": row_h,
                        "fill": palette.color(assignment[attr]),
                    }
                )
                attr += 1
            y += row_h
        if spec.design == "bar_square":
            bar_h = spec.base_size * 0.15
            prims.append(
                {
                    "type": "rect",
                    "x": -side / 2,
                    "y": -side / 2 - bar_h * 1.4,
                    "w": side * frac,
                    "h": bar_h,
                    "fill": "#333333",
                }
            )
    else:
        radius = (
            spec.base_size / 2 * math.sqrt(frac)
            if spec.design == "area_circle"
            else spec.base_size / 2
        )
        sweep = 2 * math.pi / n_attrs
        for a in range(n_attrs):
            prims.append(
                {
                    "type": "wedge",
                    "r": radius,
                    "start": -math.pi / 2 + a * sweep,
                    "end": -math.pi / 2 + (a + 1) * sweep,
                    "fill": palette.color(assignment[a]),
                }
            )
        if spec.design == "arc_circle":
            prims.append(
                {
                    "type": "arc",
                    "r": radius * 1.25,
                    "start": -math.pi / 2,
                    "end": -math.pi / 2 + 2 * math.pi * frac,
                    "stroke": "#333333",
                    "width": spec.base_size * 0.08,
                }
            )
    return prims


def _fmt(v: float) -> str:
    out = f"{v:.3f}"
    return "0.000" if out == "-0.000" else out


def _wedge_path(prim: dict) -> str:
    r, a0, a1 = prim["r"], prim["start"], prim["end"]
    x0, y0 = r * math.cos(a0), r * math.sin(a0)
    x1, y1 = r * math.cos(a1), r * math.sin(a1)
    large = 1 if (a1 - a0) > math.pi else 0
    return (
        f"M 0 0 L {_fmt(x0)} {_fmt(y0)} "
        f"A {_fmt(r)} {_fmt(r)} 0 {large} 1 {_fmt(x1)} {_fmt(y1)} Z"
    )


def _arc_path(prim: dict) -> str:
    r, a0, a1 = prim["r"], prim["start"], prim["end"]
    if a1 - a0 >= 2 * math.pi - 1e-9:
        a1 = a0 + 2 * math.pi - 1e-4
    x0, y0 = r * math.cos(a0), r * math.sin(a0)
    x1, y1 = r * math.cos(a1), r * math.sin(a1)
    large = 1 if (a1 - a0) > math.pi else 0
    return f"M {_fmt(x0)} {_fmt(y0)} A {_fmt(r)} {_fmt(r)} 0 {large} 1 {_fmt(x1)} {_fmt(y1)}"


def _primitive_svg(prim: dict) -> str:
    if prim["type"] == "rect":
        return (
            f'<rect x="{_fmt(prim["x"])}" y="{_fmt(prim["y"])}" '
            f'width="{_fmt(prim["w"])}" height="{_fmt(prim["h"])}" fill="{prim["fill"]}"/>'
        )
    if prim["type"] == "wedge":
        return f'<path d="{_wedge_path(prim)}" fill="{prim["fill"]}"/>'
    if prim["type"] == "arc":
        return (
            f'<path d="{_arc_path(prim)}" fill="none" stroke="{prim["stroke"]}" '
            f'stroke-width="{_fmt(prim["width"])}"/>'
        )
    raise DataError(f"unknown primitive {prim['type']!r}")


def render_map(
    layout: Layout,
    partition: VoronoiPartition,
    graph: DelaunayGraph,
    subsets: SubsetTable,
    primary_attr: str | None,
    secondary_attr: str | None = None,
    spec: GlyphSpec = GlyphSpec(),
    palette: Palette = Palette(),
) -> str:
    """Full map as an SVG 1.1 document string."""
    schema = subsets.schema
    if layout.n != len(partition.cells) or layout.n != subsets.n_subsets:
        raise DataError("layout, partition, and subsets disagree in size")

    def attr_index(name):
        if name is None:
            return None
        try:
            return schema.attributes.index(name)
        except ValueError:
            raise DataError(f"unknown attribute {name!r}") from None

    p_idx = attr_index(primary_attr)
    s_idx = attr_index(secondary_attr)
    b = partition.bounds
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(b.x)} {_fmt(b.y)} {_fmt(b.w)} {_fmt(b.h)}" '
        f'width="{_fmt(b.w)}" height="{_fmt(b.h)}">',
        '<g id="background">',
    ]
    labels_p = subsets.labels_for(p_idx) if p_idx is not None else None
    for i, cell in enumerate(partition.cells):
        fill = (
            palette.background_color(int(labels_p[i]))
            if labels_p is not None
            else "#e8e8e8"
        )
        points = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in cell)
        parts.append(
            f'<polygon id="cell-{i}" points="{points}" fill="{fill}" '
            f'stroke="#ffffff" stroke-width="1"/>'
        )
    parts.append("</g>")

    parts.append('<g id="outlines">')
    if s_idx is not None:
        labels_s = subsets.labels_for(s_idx)
        for a, bb in sorted(graph.edges):
            if labels_s[a] == labels_s[bb]:
                continue
            seg = shared_boundary(partition.cells[a], partition.cells[bb])
            if seg is None:
                continue
            (x0, y0), (x1, y1) = seg
            parts.append(
                f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y1)}" '
                f'stroke="#222222" stroke-width="2.5"/>'
            )
    parts.append("</g>")

    parts.append('<g id="glyphs">')
    rel = subsets.relative_counts()
    max_rel = float(rel.max())
    z_order = sorted(range(subsets.n_subsets), key=lambda i: (-subsets.counts[i], i))
    for i in z_order:
        prims = glyph_geometry(subsets.assignments[i], float(rel[i]), max_rel, spec, palette)
        x, y = layout.positions[i]
        parts.append(f'<g id="glyph-{i}" transform="translate({_fmt(x)},{_fmt(y)})">')
        parts.extend(_primitive_svg(p) for p in prims)
        parts.append("</g>")
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
