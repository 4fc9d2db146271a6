import numpy as np
import pytest

from catmap.dataset import AttributeSchema, DataError, SubsetTable, deduplicate
from catmap.distance import DissimilarityMatrix, DistanceMeasure, build_matrix
from catmap.projection import (
    Layout,
    MdsConfig,
    mca_project,
    mds_project,
    normalize_layout,
    reduce_overlap,
)


def euclidean_matrix(points):
    d = np.linalg.norm(points[:, None, :] - points[None, :, :], axis=-1)
    d = (d + d.T) / 2
    np.fill_diagonal(d, 0.0)
    return DissimilarityMatrix(d, DistanceMeasure.EUCLIDEAN)


def procrustes_residual(a, b):
    """Best rigid alignment (rotation/reflection + translation) residual."""
    a = a - a.mean(axis=0)
    b = b - b.mean(axis=0)
    u, _, vt = np.linalg.svd(a.T @ b)
    r = u @ vt
    return float(np.linalg.norm(a @ r - b))


def test_triangle_embeds_exactly():
    d = np.array([[0, 3, 4], [3, 0, 5], [4, 5, 0]], dtype=float)
    layout = mds_project(DissimilarityMatrix(d, DistanceMeasure.EUCLIDEAN))
    assert layout.stress < 1e-6


def test_planar_roundtrip_procrustes(rng):
    points = rng.normal(size=(15, 2))
    layout = mds_project(euclidean_matrix(points))
    assert layout.stress < 1e-6
    assert procrustes_residual(points, layout.positions) < 1e-6


def test_stress_monotone_on_random_instances(rng):
    for _ in range(20):
        n = int(rng.integers(4, 15))
        d = rng.uniform(0.1, 2.0, size=(n, n))
        d = (d + d.T) / 2
        np.fill_diagonal(d, 0.0)
        layout = mds_project(DissimilarityMatrix(d, DistanceMeasure.OVERLAP))
        h = layout.stress_history
        assert all(h[i + 1] <= h[i] + 1e-9 * max(1.0, h[i]) for i in range(len(h) - 1))


def test_stress_invariant_under_rotation(titanic_subsets):
    from catmap.projection import normalized_layout_stress

    m = build_matrix(titanic_subsets, DistanceMeasure.OVERLAP)
    layout = mds_project(m)
    theta = 0.77
    rot = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
    assert normalized_layout_stress(m.values, layout.positions @ rot) == pytest.approx(
        layout.stress
    )


def test_result_centered(titanic_subsets):
    m = build_matrix(titanic_subsets, DistanceMeasure.OVERLAP)
    layout = mds_project(m)
    np.testing.assert_allclose(layout.positions.mean(axis=0), 0, atol=1e-9)


def test_all_zero_matrix_rejected():
    d = np.zeros((3, 3))
    with pytest.raises(DataError, match="degenerate"):
        mds_project(DissimilarityMatrix(d, DistanceMeasure.OVERLAP))


def test_mds_deterministic(titanic_subsets):
    m = build_matrix(titanic_subsets, DistanceMeasure.OVERLAP)
    a = mds_project(m, MdsConfig(seed=3))
    b = mds_project(m, MdsConfig(seed=3))
    np.testing.assert_array_equal(a.positions, b.positions)


def test_config_validation():
    with pytest.raises(DataError):
        MdsConfig(epsilon=0)
    with pytest.raises(DataError):
        MdsConfig(max_iterations=0)
    with pytest.raises(DataError):
        MdsConfig(init="magic")


# -- MCA -------------------------------------------------------------------


def test_mca_binary_split_axis():
    # a1 alone separates the subsets into two groups; a2 is constant noise-free
    schema = AttributeSchema(("a1", "a2"), (("x", "y"), ("p", "q")))
    subsets = SubsetTable(schema, ((0, 0), (0, 1), (1, 0), (1, 1)), (1, 1, 1, 1))
    layout = mca_project(subsets)
    axis1 = np.round(layout.positions[:, 0], 9)
    assert len(set(np.abs(axis1))) <= 2


def test_mca_weighted_mean_zero(titanic_subsets):
    layout = mca_project(titanic_subsets)
    # uniform subset masses in the indicator analysis: plain mean is the
    # weighted mean
    np.testing.assert_allclose(layout.positions.mean(axis=0), 0, atol=1e-9)


def test_mca_matches_eigen_oracle():
    # two attributes, two categories each, perfectly correlated: the Burt
    # structure has a single non-trivial axis and coordinates split evenly
    schema = AttributeSchema(("a1", "a2"), (("x", "y"), ("p", "q")))
    subsets = SubsetTable(schema, ((0, 0), (1, 1)), (1, 1))
    layout = mca_project(subsets)
    assert layout.degenerate  # rank-1 residual
    assert layout.positions[0, 0] == pytest.approx(-layout.positions[1, 0])
    assert np.all(layout.positions[:, 1] == 0)


def test_mca_deterministic_signs(titanic_subsets):
    a = mca_project(titanic_subsets)
    b = mca_project(titanic_subsets)
    np.testing.assert_array_equal(a.positions, b.positions)
    for axis in range(2):
        col = a.positions[:, axis]
        assert col[np.argmax(np.abs(col))] > 0


def test_mca_equals_projection_of_raw_rows(small_table):
    # duplicate-free table: deduplication is the identity
    subsets = deduplicate(small_table)
    assert subsets.counts == (1, 1, 1)
    layout = mca_project(subsets)
    assert layout.positions.shape == (3, 2)


# -- overlap reduction -----------------------------------------------------


def test_zero_radii_identity(titanic_subsets):
    m = build_matrix(titanic_subsets, DistanceMeasure.OVERLAP)
    layout = mds_project(m)
    reduced = reduce_overlap(layout, np.zeros(layout.n))
    np.testing.assert_array_equal(reduced.positions, layout.positions)
    assert reduced.overlap_reduced
    np.testing.assert_array_equal(reduced.pre_overlap_positions, layout.positions)


def test_coincident_points_separated():
    layout = Layout(positions=np.zeros((2, 2)), method="mds")
    reduced = reduce_overlap(layout, np.array([1.0, 1.0]))
    assert np.linalg.norm(reduced.positions[0] - reduced.positions[1]) >= 1.98


def test_separation_postcondition_random_crowded(rng):
    for _ in range(10):
        n = int(rng.integers(5, 25))
        pos = rng.normal(scale=0.5, size=(n, 2))
        radii = rng.uniform(0.05, 0.3, size=n)
        layout = Layout(positions=pos, method="mds")
        reduced = reduce_overlap(layout, radii)
        d = np.linalg.norm(
            reduced.positions[:, None, :] - reduced.positions[None, :, :], axis=-1
        )
        target = (radii[:, None] + radii[None, :]) * 0.99
        np.fill_diagonal(d, np.inf)
        assert np.all(d >= target)
        assert reduced.n == n


def test_non_overlapping_layout_barely_moves(rng):
    # spread points far apart relative to their radii
    for _ in range(10):
        n = 12
        pos = rng.permutation(n)[:, None] * 10.0
        pos = np.hstack([pos, rng.normal(scale=0.1, size=(n, 1))])
        radii = rng.uniform(0.01, 0.2, size=n)
        layout = Layout(positions=pos, method="mds")
        reduced = reduce_overlap(layout, radii)
        disp = np.linalg.norm(reduced.positions - pos, axis=1).max()
        assert disp <= 0.01 * radii.max() + 1e-9


# -- normalization ---------------------------------------------------------


def test_single_point_maps_to_center():
    layout = Layout(positions=np.array([[3.0, 7.0]]), method="mds")
    out = normalize_layout(layout, 100, 100, padding=10)
    np.testing.assert_allclose(out.positions[0], [50, 50])


def test_unit_square_fills_padded_viewport():
    pts = np.array([[0, 0], [1, 0], [0, 1], [1, 1]], dtype=float)
    out = normalize_layout(Layout(positions=pts, method="mds"), 100, 100, padding=10)
    assert out.positions.min() == pytest.approx(10)
    assert out.positions.max() == pytest.approx(90)


def test_normalization_preserves_distance_ratios(rng):
    pts = rng.normal(size=(8, 2))
    out = normalize_layout(Layout(positions=pts, method="mds"), 300, 200, padding=5)
    d_in = np.linalg.norm(pts[:, None] - pts[None, :], axis=-1)
    d_out = np.linalg.norm(
        out.positions[:, None] - out.positions[None, :], axis=-1
    )
    iu = np.triu_indices(8, k=1)
    ratios = d_out[iu] / d_in[iu]
    np.testing.assert_allclose(ratios, ratios[0])
