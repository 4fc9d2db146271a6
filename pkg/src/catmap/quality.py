"""Projection quality metrics and the MDS-vs-MCA comparison harness.

Rank-based metrics (trustworthiness, continuity, neighborhood hit) break
distance ties by ascending point id; categorical distance matrices are
tie-heavy, so the tie rule measurably affects the numbers and is fixed
here once.  Spearman correlation uses average ranks for ties.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np
from scipy.stats import spearmanr

from .dataset import CategoricalTable, DataError, SubsetTable, deduplicate
from .distance import DissimilarityMatrix, DistanceMeasure, build_matrix
from .projection import Layout, MdsConfig, mca_project, mds_project, reduce_overlap


def layout_distances(layout: Layout) -> np.ndarray:
    p = layout.positions
    return np.linalg.norm(p[:, None, :] - p[None, :, :], axis=-1)


def neighbor_order(dist: np.ndarray, i: int) -> np.ndarray:
    """Other points ordered by (distance to i, id); nearest first."""
    n = dist.shape[0]
    others = np.array([j for j in range(n) if j != i])
    order = np.lexsort((others, dist[i, others]))
    return others[order]


def _ranks(dist: np.ndarray) -> np.ndarray:
    """ranks[i, j] = 1-based rank of j among i's neighbors (0 on diagonal)."""
    n = dist.shape[0]
    ranks = np.zeros((n, n), dtype=int)
    for i in range(n):
        for r, j in enumerate(neighbor_order(dist, i), start=1):
            ranks[i, j] = r
    return ranks


def _neighbor_sets(dist: np.ndarray, k: int) -> list[set[int]]:
    return [set(neighbor_order(dist, i)[:k]) for i in range(dist.shape[0])]


def _tw_normalizer(n: int, k: int) -> float:
    if k < n / 2:
        return n * k * (2 * n - 3 * k - 1)
    return n * (n - k) * (n - k - 1)


def trustworthiness(d_high: DissimilarityMatrix, layout: Layout, k: int) -> float:
    """1 minus the rank-weighted mass of false projected neighbors."""
    n = d_high.n
    if k >= n:
        raise DataError("k must be smaller than the point count")
    d_low = layout_distances(layout)
    high_ranks = _ranks(d_high.values)
    high_sets = _neighbor_sets(d_high.values, k)
    low_sets = _neighbor_sets(d_low, k)
    penalty = 0
    for i in range(n):
        for j in low_sets[i] - high_sets[i]:
            penalty += high_ranks[i, j] - k
    return 1.0 - 2.0 * penalty / _tw_normalizer(n, k)


def continuity(d_high: DissimilarityMatrix, layout: Layout, k: int) -> float:
    """1 minus the rank-weighted mass of missing projected neighbors."""
    n = d_high.n
    if k >= n:
        raise DataError("k must be smaller than the point count")
    d_low = layout_distances(layout)
    low_ranks = _ranks(d_low)
    high_sets = _neighbor_sets(d_high.values, k)
    low_sets = _neighbor_sets(d_low, k)
    penalty = 0
    for i in range(n):
        for j in high_sets[i] - low_sets[i]:
            penalty += low_ranks[i, j] - k
    return 1.0 - 2.0 * penalty / _tw_normalizer(n, k)


def normalized_stress(d_high: DissimilarityMatrix, layout: Layout) -> float:
    """Squared distance residuals over the projected distance mass.

    Layouts are taken in their native units (an MDS layout already lives
    on the scale of the input distances), so the value is sensitive to
    layout scale by design.
    """
    if d_high.n < 2:
        raise DataError("need at least 2 points")
    d = d_high.condensed()
    if np.all(d == 0):
        raise DataError("all original distances are zero")
    iu = np.triu_indices(d_high.n, k=1)
    dhat = layout_distances(layout)[iu]
    denom = float(np.dot(dhat, dhat))
    if denom == 0:
        raise DataError("all projected distances are zero")
    resid = d - dhat
    return float(np.dot(resid, resid) / denom)


def shepard_correlation(d_high: DissimilarityMatrix, layout: Layout) -> float:
    """Spearman rank correlation of original vs projected pair distances."""
    if d_high.n < 3:
        raise DataError("need at least 3 points")
    d = d_high.condensed()
    iu = np.triu_indices(d_high.n, k=1)
    dhat = layout_distances(layout)[iu]
    if np.all(d == d[0]) or np.all(dhat == dhat[0]):
        raise DataError("constant distance vector: correlation undefined")
    rho, _ = spearmanr(d, dhat)
    return float(rho)


def neighborhood_hit(layout: Layout, labels: np.ndarray, k: int) -> float:
    """Mean fraction of k nearest projected neighbors sharing the label."""
    n = layout.n
    if k >= n:
        raise DataError("k must be smaller than the point count")
    d_low = layout_distances(layout)
    hits = []
    for i in range(n):
        nn = neighbor_order(d_low, i)[:k]
        hits.append(np.mean(labels[nn] == labels[i]))
    return float(np.mean(hits))


@dataclass(frozen=True)
class PipelineConfig:
    method: str  # "mds" | "mca"
    measure: DistanceMeasure | None = None
    overlap_reduction: bool = False
    seed: int = 0

    def label(self) -> str:
        if self.method == "mca":
            return "MCA"
        return f"MDS+{self.measure.value}"

    @classmethod
    def parse(cls, spec: str, overlap_reduction: bool = False, seed: int = 0):
        """Parse "mds:overlap" / "mca" style config strings."""
        parts = spec.split(":")
        if parts[0] == "mca":
            return cls("mca", None, overlap_reduction, seed)
        if parts[0] == "mds":
            measure = DistanceMeasure.parse(parts[1]) if len(parts) > 1 else DistanceMeasure.OVERLAP
            return cls("mds", measure, overlap_reduction, seed)
        raise DataError(f"unknown pipeline config {spec!r}")


@dataclass(frozen=True)
class QualityReport:
    config: PipelineConfig
    tw: float
    ct: float
    sc: float
    ns: float
    nh_per_attribute: dict[str, float]
    nh_mean: float
    nh_median: float
    k: int


def evaluate_layout(
    d_high: DissimilarityMatrix,
    layout: Layout,
    subsets: SubsetTable,
    config: PipelineConfig,
    k: int = 7,
) -> QualityReport:
    nh = {
        name: neighborhood_hit(layout, subsets.labels_for(a), k)
        for a, name in enumerate(subsets.schema.attributes)
    }
    vals = list(nh.values())
    return QualityReport(
        config=config,
        tw=trustworthiness(d_high, layout, k),
        ct=continuity(d_high, layout, k),
        sc=shepard_correlation(d_high, layout),
        ns=normalized_stress(d_high, layout),
        nh_per_attribute=nh,
        nh_mean=float(np.mean(vals)),
        nh_median=float(np.median(vals)),
        k=k,
    )


def glyph_radii(subsets: SubsetTable, layout: Layout, base_frac: float = 0.04) -> np.ndarray:
    """Glyph disc radii in layout units, area-proportional to subset size."""
    rel = subsets.relative_counts()
    span = float(np.ptp(layout.positions, axis=0).max())
    if span == 0:
        span = 1.0
    return span * base_frac * np.sqrt(rel / rel.max())


def run_pipeline(
    subsets: SubsetTable,
    config: PipelineConfig,
    mds_iterations: int = 300,
    metric_measure: DistanceMeasure | None = None,
) -> tuple[Layout, DissimilarityMatrix]:
    """Project a subset table and return (layout, metric-grounding matrix).

    For MCA the returned matrix uses ``metric_measure`` (default overlap)
    since MCA itself consumes no distance matrix.
    """
    if config.method == "mds":
        measure = config.measure or DistanceMeasure.OVERLAP
        matrix = build_matrix(subsets, measure)
        layout = mds_project(matrix, MdsConfig(max_iterations=mds_iterations, seed=config.seed))
    elif config.method == "mca":
        matrix = build_matrix(subsets, metric_measure or DistanceMeasure.OVERLAP)
        layout = mca_project(subsets)
    else:
        raise DataError(f"unknown projection method {config.method!r}")
    if config.overlap_reduction:
        layout = reduce_overlap(layout, glyph_radii(subsets, layout))
    return layout, matrix


def compare_pipelines(
    table: CategoricalTable, configs: list[PipelineConfig], k: int = 7
) -> list[QualityReport]:
    """Project under every config and score each layout with all metrics."""
    if not configs:
        raise DataError("need at least one pipeline config")
    subsets = deduplicate(table)
    reports = []
    for config in configs:
        layout, matrix = run_pipeline(subsets, config)
        reports.append(evaluate_layout(matrix, layout, subsets, config, k=k))
    return reports


_COLUMNS = ["TW", "CT", "SC", "NS", "AvgNH", "MedNH"]


def _row_values(r: QualityReport) -> list[float]:
    return [r.tw, r.ct, r.sc, r.ns, r.nh_mean, r.nh_median]


def report_csv(reports: list[QualityReport]) -> str:
    buf = io.StringIO()
    buf.write("config," + ",".join(_COLUMNS) + "\n")
    for r in reports:
        buf.write(r.config.label() + "," + ",".join(f"{v:.4f}" for v in _row_values(r)) + "\n")
    return buf.getvalue()


def report_markdown(reports: list[QualityReport]) -> str:
    width = max(len("config"), *(len(r.config.label()) for r in reports))
    lines = [
        "| " + "config".ljust(width) + " | " + " | ".join(c.rjust(6) for c in _COLUMNS) + " |",
        "| " + "-" * width + " | " + " | ".join("-" * 6 for _ in _COLUMNS) + " |",
    ]
    for r in reports:
        cells = " | ".join(f"{v:6.2f}" for v in _row_values(r))
        lines.append("| " + r.config.label().ljust(width) + " | " + cells + " |")
    return "\n".join(lines) + "\n"
