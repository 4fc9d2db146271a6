"""Similarity-preserving 2-D data maps for categorical tables."""

from .dataset import (
    AttributeSchema,
    CategoricalTable,
    DataError,
    EncodedItem,
    SubsetTable,
    deduplicate,
    encode,
    load_csv,
)
from .distance import DissimilarityMatrix, DistanceMeasure, build_matrix, distance
from .fracturedness import (
    FracturednessReport,
    Labeling,
    analyze,
    category_components,
    component_fracturedness,
    edge_fracturedness,
)
from .geometry import DelaunayGraph, Rect, VoronoiPartition, delaunay, voronoi
from .projection import (
    Layout,
    MdsConfig,
    mca_project,
    mds_project,
    normalize_layout,
    reduce_overlap,
)
from .quality import (
    PipelineConfig,
    QualityReport,
    compare_pipelines,
    continuity,
    neighborhood_hit,
    normalized_stress,
    shepard_correlation,
    trustworthiness,
)
from .render import GlyphSpec, Palette, glyph_geometry, render_map
from .selection import SelectionResult, common_categories

__version__ = "0.1.0"

__all__ = [
    "AttributeSchema",
    "CategoricalTable",
    "DataError",
    "DelaunayGraph",
    "DissimilarityMatrix",
    "DistanceMeasure",
    "EncodedItem",
    "FracturednessReport",
    "GlyphSpec",
    "Labeling",
    "Layout",
    "MdsConfig",
    "Palette",
    "PipelineConfig",
    "QualityReport",
    "Rect",
    "SelectionResult",
    "SubsetTable",
    "VoronoiPartition",
    "analyze",
    "build_matrix",
    "category_components",
    "common_categories",
    "compare_pipelines",
    "component_fracturedness",
    "continuity",
    "deduplicate",
    "delaunay",
    "distance",
    "edge_fracturedness",
    "encode",
    "glyph_geometry",
    "load_csv",
    "mca_project",
    "mds_project",
    "neighborhood_hit",
    "normalize_layout",
    "normalized_stress",
    "reduce_overlap",
    "render_map",
    "shepard_correlation",
    "trustworthiness",
    "voronoi",
]
