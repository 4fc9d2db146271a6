"""Render the full map as an SVG file.

Background cells are Voronoi regions colored by the Sex attribute, heavy
outlines trace Survived boundaries, and each subset is drawn as a
segmented square glyph whose area encodes its frequency.  Writes
titanic_map.svg next to this script.
"""

from pathlib import Path

from catmap import pipeline
from catmap.dataset import deduplicate, load_csv
from catmap.projection import normalize_layout
from catmap.render import GlyphSpec, render_map

DATA = Path(__file__).resolve().parents[1] / "data" / "titanic.csv"
OUT = Path(__file__).resolve().parent / "titanic_map.svg"


def main():
    subsets = deduplicate(load_csv(DATA))
    layout, _ = pipeline.project(subsets, seed=0)
    layout = normalize_layout(layout, *pipeline.VIEWPORT, padding=40.0)
    graph, partition = pipeline.tessellate(layout)

    svg = render_map(
        layout, partition, graph, subsets,
        primary_attr="Sex",
        secondary_attr="Survived",
        spec=GlyphSpec(design="area_square"),
    )
    OUT.write_text(svg, encoding="utf-8")
    print(f"wrote {OUT} ({len(svg)} bytes)")


if __name__ == "__main__":
    main()
