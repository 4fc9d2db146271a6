"""Delaunay triangulation and clipped Voronoi partition of a layout.

The triangulation is the adjacency substrate for the fracturedness
measures; the Voronoi cells (clipped to a bounding rectangle) are the
colored background of the rendered map.  Each Voronoi cell is computed
by clipping the bounding rectangle against the perpendicular-bisector
half-planes of the site's Delaunay neighbors; for an unweighted diagram
those half-planes are exactly the ones bounding the cell.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import Delaunay as _SciDelaunay
from scipy.spatial import QhullError

from .dataset import DataError


@dataclass(frozen=True)
class Rect:
    x: float
    y: float
    w: float
    h: float

    @property
    def area(self) -> float:
        return self.w * self.h

    def corners(self) -> np.ndarray:
        return np.array(
            [
                [self.x, self.y],
                [self.x + self.w, self.y],
                [self.x + self.w, self.y + self.h],
                [self.x, self.y + self.h],
            ]
        )

    def contains(self, p, eps: float = 1e-9) -> bool:
        return (
            self.x - eps <= p[0] <= self.x + self.w + eps
            and self.y - eps <= p[1] <= self.y + self.h + eps
        )


@dataclass(frozen=True)
class DelaunayGraph:
    points: np.ndarray
    edges: frozenset[tuple[int, int]]  # (i, j) with i < j
    hull: tuple[int, ...]  # hull vertex ids in boundary order
    collinear: bool = False
    jittered: tuple[int, ...] = ()  # ids nudged off exact duplicates

    @property
    def n(self) -> int:
        return self.points.shape[0]

    def neighbors(self, i: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


@dataclass(frozen=True)
class VoronoiPartition:
    cells: tuple[np.ndarray, ...]  # one CCW polygon per site, clipped
    bounds: Rect
    sites: np.ndarray


def _collinear_graph(points: np.ndarray) -> DelaunayGraph:
    # degenerate mode: path graph along the dominant direction
    centered = points - points.mean(axis=0)
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    t = centered @ vt[0]
    order = np.lexsort((np.arange(len(t)), t))
    edges = frozenset(
        (min(order[i], order[i + 1]), max(order[i], order[i + 1]))
        for i in range(len(order) - 1)
    )
    return DelaunayGraph(points, edges, tuple(order), collinear=True)


def delaunay(points: np.ndarray) -> DelaunayGraph:
    """Delaunay triangulation of a 2-D point set.

    Degenerate modes: two points yield a single edge, all-collinear sets
    yield a path graph along the line.  Exact duplicates are nudged by
    1e-9 (later id moves) and reported via ``jittered``.
    """
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or points.shape[1] != 2:
        raise DataError("points must be (n, 2)")
    n = points.shape[0]
    if n < 2:
        raise DataError("need at least 2 points to triangulate")

    jittered = []
    seen: dict[tuple[float, float], int] = {}
    pts = points.copy()
    for i in range(n):
        key = (pts[i, 0], pts[i, 1])
        while key in seen:
            pts[i] = pts[i] + 1e-9
            key = (pts[i, 0], pts[i, 1])
            if i not in jittered:
                jittered.append(i)
        seen[key] = i

    if n == 2:
        return DelaunayGraph(pts, frozenset({(0, 1)}), (0, 1), jittered=tuple(jittered))

    try:
        tri = _SciDelaunay(pts)
    except QhullError:
        g = _collinear_graph(pts)
        return DelaunayGraph(
            pts, g.edges, g.hull, collinear=True, jittered=tuple(jittered)
        )
    if tri.simplices.shape[0] == 0:
        g = _collinear_graph(pts)
        return DelaunayGraph(
            pts, g.edges, g.hull, collinear=True, jittered=tuple(jittered)
        )

    edges = set()
    for simplex in tri.simplices:
        for a in range(3):
            i, j = int(simplex[a]), int(simplex[(a + 1) % 3])
            edges.add((min(i, j), max(i, j)))

    hull_pairs = {(int(a), int(b)) for a, b in tri.convex_hull}
    succ = {}
    for a, b in hull_pairs:
        succ.setdefault(a, []).append(b)
        succ.setdefault(b, []).append(a)
    start = min(succ)
    hull = [start]
    prev = None
    while True:
        nxt = [v for v in succ[hull[-1]] if v != prev]
        prev = hull[-1]
        hull.append(nxt[0])
        if hull[-1] == start:
            hull.pop()
            break

    return DelaunayGraph(
        pts, frozenset(edges), tuple(hull), jittered=tuple(jittered)
    )


def _clip_halfplane(poly: np.ndarray, point: np.ndarray, normal: np.ndarray) -> np.ndarray:
    """Sutherland-Hodgman clip keeping the side with (p - point).normal <= 0."""
    if len(poly) == 0:
        return poly
    out = []
    vals = (poly - point) @ normal
    m = len(poly)
    for i in range(m):
        j = (i + 1) % m
        inside_i, inside_j = vals[i] <= 0, vals[j] <= 0
        if inside_i:
            out.append(poly[i])
        if inside_i != inside_j:
            t = vals[i] / (vals[i] - vals[j])
            out.append(poly[i] + t * (poly[j] - poly[i]))
    return np.array(out) if out else np.empty((0, 2))


def voronoi(graph: DelaunayGraph, bounds: Rect) -> VoronoiPartition:
    """Voronoi cells of the triangulated sites, clipped to a rectangle."""
    for i in range(graph.n):
        if not bounds.contains(graph.points[i]):
            raise DataError(f"site {i} lies outside the clipping bounds")
    adj = graph.adjacency()
    cells = []
    for i in range(graph.n):
        poly = bounds.corners()
        site = graph.points[i]
        for j in sorted(adj[i]):
            other = graph.points[j]
            mid = (site + other) / 2.0
            normal = other - site  # keep the side closer to `site`
            poly = _clip_halfplane(poly, mid, normal)
        cells.append(poly)
    return VoronoiPartition(tuple(cells), bounds, graph.points.copy())


def polygon_area(poly: np.ndarray) -> float:
    if len(poly) < 3:
        return 0.0
    x, y = poly[:, 0], poly[:, 1]
    return float(abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))) / 2.0)


def default_bounds(points: np.ndarray, padding_frac: float = 0.05) -> Rect:
    """Bounding rectangle of the points expanded by a relative margin."""
    lo = points.min(axis=0)
    hi = points.max(axis=0)
    span = np.maximum(hi - lo, 1e-9)
    pad = span * padding_frac
    return Rect(
        float(lo[0] - pad[0]),
        float(lo[1] - pad[1]),
        float(span[0] + 2 * pad[0]),
        float(span[1] + 2 * pad[1]),
    )


def shared_boundary(cell_a: np.ndarray, cell_b: np.ndarray, tol: float = 1e-7):
    """Endpoints of the boundary segment two clipped cells share, or None."""
    if len(cell_a) < 2 or len(cell_b) < 2:
        return None

    def segments(poly):
        return [(poly[i], poly[(i + 1) % len(poly)]) for i in range(len(poly))]

    for p1, p2 in segments(cell_a):
        for q1, q2 in segments(cell_b):
            if (
                np.allclose(p1, q2, atol=tol) and np.allclose(p2, q1, atol=tol)
            ) or (np.allclose(p1, q1, atol=tol) and np.allclose(p2, q2, atol=tol)):
                if np.linalg.norm(p2 - p1) > tol:
                    return np.array([p1, p2])
    return None


def partition_to_json_dict(partition: VoronoiPartition, graph: DelaunayGraph) -> dict:
    return {
        "bounds": {
            "x": partition.bounds.x,
            "y": partition.bounds.y,
            "w": partition.bounds.w,
            "h": partition.bounds.h,
        },
        "cells": [
            {"id": i, "polygon": [[float(x), float(y)] for x, y in cell]}
            for i, cell in enumerate(partition.cells)
        ],
        "edges": sorted([list(e) for e in graph.edges]),
        "hull": list(graph.hull),
    }
