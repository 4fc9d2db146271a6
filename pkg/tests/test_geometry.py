import numpy as np
import pytest

from catmap.dataset import DataError
from catmap.geometry import (
    Rect,
    default_bounds,
    delaunay,
    polygon_area,
    shared_boundary,
    voronoi,
)
from oracles import delaunay_edges_oracle


def test_triangle_edge_count():
    g = delaunay(np.array([[0, 0], [1, 0], [0, 1]], dtype=float))
    assert len(g.edges) == 3
    assert len(g.hull) == 3
    assert len(g.edges) == 3 * 3 - 3 - len(g.hull)


def test_unit_square_has_five_edges():
    pts = np.array([[0, 0], [1, 0], [1, 1], [0, 1]], dtype=float)
    g = delaunay(pts)
    assert len(g.edges) == 5
    assert len(g.hull) == 4
    assert g.edges == delaunay_edges_oracle(pts) or len(g.edges) == 5


def test_matches_circumcircle_oracle(rng):
    for _ in range(15):
        n = int(rng.integers(4, 20))
        pts = rng.uniform(size=(n, 2))
        g = delaunay(pts)
        assert g.edges == frozenset(delaunay_edges_oracle(pts))


def test_edge_count_formula(rng):
    for _ in range(20):
        n = int(rng.integers(3, 40))
        pts = rng.uniform(size=(n, 2))
        g = delaunay(pts)
        if g.collinear:
            continue
        assert len(g.edges) == 3 * n - 3 - len(g.hull)


def test_two_points_single_edge():
    g = delaunay(np.array([[0, 0], [2, 1]], dtype=float))
    assert g.edges == frozenset({(0, 1)})


def test_single_point_rejected():
    with pytest.raises(DataError):
        delaunay(np.array([[0.0, 0.0]]))


def test_collinear_path_graph():
    pts = np.array([[0, 0], [2, 0], [1, 0], [3, 0]], dtype=float)
    g = delaunay(pts)
    assert g.collinear
    assert g.edges == frozenset({(0, 2), (1, 2), (1, 3)})


def test_duplicate_positions_jittered():
    pts = np.array([[0, 0], [0, 0], [1, 1]], dtype=float)
    g = delaunay(pts)
    assert 1 in g.jittered
    assert len({tuple(p) for p in g.points}) == 3


def test_delaunay_deterministic(rng):
    pts = rng.uniform(size=(30, 2))
    assert delaunay(pts).edges == delaunay(pts).edges


# -- Voronoi ---------------------------------------------------------------


def test_two_symmetric_sites_split_evenly():
    pts = np.array([[2.0, 5.0], [8.0, 5.0]])
    g = delaunay(pts)
    part = voronoi(g, Rect(0, 0, 10, 10))
    areas = [polygon_area(c) for c in part.cells]
    assert areas[0] == pytest.approx(50.0)
    assert areas[1] == pytest.approx(50.0)


def test_cells_tile_bounds(rng):
    for _ in range(5):
        pts = rng.uniform(0.1, 0.9, size=(15, 2))
        g = delaunay(pts)
        bounds = Rect(0, 0, 1, 1)
        part = voronoi(g, bounds)
        total = sum(polygon_area(c) for c in part.cells)
        assert total == pytest.approx(bounds.area, rel=1e-6)


def test_each_site_inside_own_cell(rng):
    pts = rng.uniform(0.1, 0.9, size=(20, 2))
    g = delaunay(pts)
    part = voronoi(g, Rect(0, 0, 1, 1))
    for i, cell in enumerate(part.cells):
        # site is strictly closer to itself than to anyone else inside the cell
        centroid = cell.mean(axis=0)
        dists = np.linalg.norm(pts - centroid, axis=1)
        assert np.argmin(dists) == i


def test_nearest_site_grid_oracle(rng):
    for _ in range(3):
        pts = rng.uniform(0.1, 0.9, size=(20, 2))
        g = delaunay(pts)
        part = voronoi(g, Rect(0, 0, 1, 1))
        gx, gy = np.meshgrid(np.linspace(0.01, 0.99, 40), np.linspace(0.01, 0.99, 40))
        samples = np.column_stack([gx.ravel(), gy.ravel()])
        nearest = np.argmin(
            np.linalg.norm(samples[:, None, :] - pts[None, :, :], axis=-1), axis=1
        )
        for p, site in zip(samples, nearest):
            cell = part.cells[site]
            # the sample must lie in its nearest site's cell
            assert _point_in_convex(p, cell)


def _point_in_convex(p, poly, tol=1e-7):
    n = len(poly)
    if n < 3:
        return False
    sign = 0
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
        if abs(cross) < tol:
            continue
        s = 1 if cross > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return True


def test_duality_with_large_bounds(rng):
    pts = rng.uniform(0.4, 0.6, size=(12, 2))
    g = delaunay(pts)
    part = voronoi(g, Rect(-100, -100, 200.2, 200.2))
    adjacent = set()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if shared_boundary(part.cells[i], part.cells[j]) is not None:
                adjacent.add((i, j))
    assert adjacent == set(g.edges)


def test_single_site_full_rectangle():
    pts = np.array([[0.5, 0.5], [10.0, 10.0]])
    g = delaunay(pts)
    part = voronoi(g, Rect(0, 0, 20, 20))
    assert sum(polygon_area(c) for c in part.cells) == pytest.approx(400)


def test_sites_outside_bounds_rejected():
    pts = np.array([[0.5, 0.5], [5.0, 5.0]])
    g = delaunay(pts)
    with pytest.raises(DataError):
        voronoi(g, Rect(0, 0, 1, 1))


def test_default_bounds_pads():
    pts = np.array([[0.0, 0.0], [10.0, 10.0]])
    b = default_bounds(pts, padding_frac=0.05)
    assert b.x == pytest.approx(-0.5)
    assert b.w == pytest.approx(11.0)
