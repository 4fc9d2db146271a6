"""End-to-end orchestration shared by the CLI and the HTTP service."""

from __future__ import annotations

import numpy as np

from .dataset import SubsetTable
from .distance import DistanceMeasure
from .geometry import DelaunayGraph, VoronoiPartition, default_bounds, delaunay, voronoi
from .projection import Layout
from .quality import PipelineConfig, glyph_radii, run_pipeline

VIEWPORT = (800.0, 600.0)


def project(
    subsets: SubsetTable,
    method: str = "mds",
    measure: DistanceMeasure = DistanceMeasure.OVERLAP,
    overlap_reduction: bool = True,
    seed: int = 0,
) -> tuple[Layout, np.ndarray]:
    """Project a subset table; returns the layout and glyph radii."""
    config = PipelineConfig(
        method=method,
        measure=measure if method == "mds" else None,
        overlap_reduction=overlap_reduction,
        seed=seed,
    )
    layout, _ = run_pipeline(subsets, config)
    return layout, glyph_radii(subsets, layout)


def tessellate(layout: Layout) -> tuple[DelaunayGraph, VoronoiPartition]:
    graph = delaunay(layout.positions)
    partition = voronoi(graph, default_bounds(layout.positions))
    return graph, partition


def layout_to_json_dict(
    layout: Layout, subsets: SubsetTable, radii: np.ndarray
) -> dict:
    doc = {
        "method": layout.method,
        "measure": layout.measure.value if layout.measure else None,
        "stress": layout.stress,
        "points": [
            {
                "id": i,
                "x": float(layout.positions[i, 0]),
                "y": float(layout.positions[i, 1]),
                "r": float(radii[i]),
                "count": subsets.counts[i],
                "assignment": {
                    subsets.schema.attributes[a]: subsets.schema.categories[a][c]
                    for a, c in enumerate(subsets.assignments[i])
                },
            }
            for i in range(layout.n)
        ],
        "preOverlap": None,
    }
    if layout.pre_overlap_positions is not None:
        doc["preOverlap"] = [
            {
                "id": i,
                "x": float(layout.pre_overlap_positions[i, 0]),
                "y": float(layout.pre_overlap_positions[i, 1]),
            }
            for i in range(layout.n)
        ]
    return doc
