import numpy as np
import pytest

from catmap.dataset import DataError, deduplicate
from catmap.distance import DissimilarityMatrix, DistanceMeasure, build_matrix
from catmap.projection import Layout
from catmap.quality import (
    PipelineConfig,
    compare_pipelines,
    continuity,
    layout_distances,
    neighborhood_hit,
    normalized_stress,
    report_csv,
    report_markdown,
    shepard_correlation,
    trustworthiness,
)
from oracles import (
    continuity_oracle,
    neighborhood_hit_oracle,
    normalized_stress_oracle,
    spearman_oracle,
    trustworthiness_oracle,
)


def random_instance(rng, n):
    """A random distance matrix with distinct entries plus a random layout."""
    d = rng.uniform(0.2, 2.0, size=(n, n))
    d = (d + d.T) / 2
    np.fill_diagonal(d, 0.0)
    layout = Layout(positions=rng.normal(size=(n, 2)), method="mds")
    return DissimilarityMatrix(d, DistanceMeasure.OVERLAP), layout


def identity_pair(rng, n):
    pos = rng.normal(size=(n, 2))
    layout = Layout(positions=pos, method="mds")
    d = layout_distances(layout)
    d = (d + d.T) / 2
    np.fill_diagonal(d, 0.0)
    return DissimilarityMatrix(d, DistanceMeasure.EUCLIDEAN), layout


def test_identity_projection_is_perfect(rng):
    d, layout = identity_pair(rng, 10)
    assert trustworthiness(d, layout, 7) == pytest.approx(1.0)
    assert continuity(d, layout, 7) == pytest.approx(1.0)
    assert normalized_stress(d, layout) == pytest.approx(0.0, abs=1e-15)
    assert shepard_correlation(d, layout) == pytest.approx(1.0)


def test_oracle_agreement_random_instances(rng):
    for _ in range(40):
        n = int(rng.integers(5, 13))
        k = int(rng.integers(1, n - 1))
        d, layout = random_instance(rng, n)
        d_low = layout_distances(layout)
        assert trustworthiness(d, layout, k) == pytest.approx(
            trustworthiness_oracle(d.values, d_low, k), abs=1e-12
        )
        assert continuity(d, layout, k) == pytest.approx(
            continuity_oracle(d.values, d_low, k), abs=1e-12
        )
        assert normalized_stress(d, layout) == pytest.approx(
            normalized_stress_oracle(d.values, d_low), abs=1e-12
        )
        iu = np.triu_indices(n, k=1)
        assert shepard_correlation(d, layout) == pytest.approx(
            spearman_oracle(d.values[iu], d_low[iu]), abs=1e-12
        )
        labels = rng.integers(0, 3, size=n)
        assert neighborhood_hit(layout, labels, k) == pytest.approx(
            neighborhood_hit_oracle(d_low, labels, k), abs=1e-12
        )


def test_k_bounds():
    d = DissimilarityMatrix(np.array([[0.0, 1.0], [1.0, 0.0]]), DistanceMeasure.OVERLAP)
    layout = Layout(positions=np.array([[0.0, 0.0], [1.0, 0.0]]), method="mds")
    with pytest.raises(DataError):
        trustworthiness(d, layout, 2)
    with pytest.raises(DataError):
        continuity(d, layout, 5)
    with pytest.raises(DataError):
        neighborhood_hit(layout, np.array([0, 1]), 2)


def test_rank_metrics_scale_invariant(rng):
    d, layout = random_instance(rng, 10)
    scaled = Layout(positions=layout.positions * 37.5, method="mds")
    assert trustworthiness(d, layout, 3) == trustworthiness(d, scaled, 3)
    assert continuity(d, layout, 3) == continuity(d, scaled, 3)
    assert shepard_correlation(d, layout) == pytest.approx(
        shepard_correlation(d, scaled)
    )


def test_nh_invariant_under_isometry(rng):
    _, layout = random_instance(rng, 12)
    labels = rng.integers(0, 3, size=12)
    theta = 1.1
    rot = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
    moved = Layout(positions=layout.positions @ rot + np.array([5.0, -3.0]), method="mds")
    assert neighborhood_hit(layout, labels, 5) == neighborhood_hit(moved, labels, 5)


def test_nh_uniform_label_is_one(rng):
    _, layout = random_instance(rng, 10)
    assert neighborhood_hit(layout, np.zeros(10, dtype=int), 7) == 1.0


def test_nh_separated_clusters(rng):
    a = rng.normal(scale=0.01, size=(10, 2))
    b = rng.normal(scale=0.01, size=(10, 2)) + np.array([100.0, 0.0])
    layout = Layout(positions=np.vstack([a, b]), method="mds")
    labels = np.array([0] * 10 + [1] * 10)
    assert neighborhood_hit(layout, labels, 7) == 1.0


def test_sc_monotone_transform_is_one(titanic_subsets):
    # jaccard and overlap matrices of the same data are monotone transforms
    mo = build_matrix(titanic_subsets, DistanceMeasure.OVERLAP)
    mj = build_matrix(titanic_subsets, DistanceMeasure.JACCARD)
    from scipy.stats import spearmanr

    iu = np.triu_indices(24, k=1)
    rho, _ = spearmanr(mo.values[iu], mj.values[iu])
    assert rho == pytest.approx(1.0)


def test_sc_constant_vector_rejected():
    d = np.ones((4, 4)) - np.eye(4)
    dm = DissimilarityMatrix(d, DistanceMeasure.OVERLAP)
    layout = Layout(positions=np.random.default_rng(0).normal(size=(4, 2)), method="mds")
    with pytest.raises(DataError):
        shepard_correlation(dm, layout)


def test_ns_errors():
    d = np.zeros((3, 3))
    dm = DissimilarityMatrix(d, DistanceMeasure.OVERLAP)
    layout = Layout(positions=np.random.default_rng(0).normal(size=(3, 2)), method="mds")
    with pytest.raises(DataError):
        normalized_stress(dm, layout)


def test_compare_pipelines_shapes(titanic_table):
    configs = [
        PipelineConfig("mds", DistanceMeasure.OVERLAP),
        PipelineConfig("mds", DistanceMeasure.JACCARD),
        PipelineConfig("mca"),
    ]
    reports = compare_pipelines(titanic_table, configs)
    assert [r.config.label() for r in reports] == ["MDS+overlap", "MDS+jaccard", "MCA"]
    for r in reports:
        assert 0 <= r.tw <= 1 and 0 <= r.ct <= 1
        assert -1 <= r.sc <= 1 and r.ns >= 0
        assert len(r.nh_per_attribute) == 4
        assert r.k == 7
    csv = report_csv(reports)
    assert csv.startswith("config,TW,CT,SC,NS,AvgNH,MedNH")
    md = report_markdown(reports)
    assert md.count("|") > 10


def test_compare_pipelines_empty_config_rejected(titanic_table):
    with pytest.raises(DataError):
        compare_pipelines(titanic_table, [])


def test_compare_pipelines_deterministic(titanic_table):
    cfg = [PipelineConfig("mds", DistanceMeasure.OVERLAP, seed=5)]
    a = compare_pipelines(titanic_table, cfg)[0]
    b = compare_pipelines(titanic_table, cfg)[0]
    assert (a.tw, a.ct, a.sc, a.ns, a.nh_mean, a.nh_median) == (
        b.tw, b.ct, b.sc, b.ns, b.nh_mean, b.nh_median
    )


def test_config_parsing():
    c = PipelineConfig.parse("mds:jaccard")
    assert c.method == "mds" and c.measure is DistanceMeasure.JACCARD
    assert PipelineConfig.parse("mca").method == "mca"
    with pytest.raises(DataError):
        PipelineConfig.parse("tsne")
