"""Fracturedness of attribute labelings over the Delaunay graph.

Edge fracturedness is the fraction of triangulation edges whose
endpoints carry different categories.  Component fracturedness compares
the number of connected regions the categories split the map into
against the category count.  Both are computed with exact rational
arithmetic so the per-category decomposition sums to the attribute value
with equality, not tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .dataset import DataError, SubsetTable
from .geometry import DelaunayGraph


@dataclass(frozen=True)
class Labeling:
    """One category id per graph vertex for a single attribute."""

    attribute: str
    labels: np.ndarray

    @property
    def observed_categories(self) -> list[int]:
        return sorted(set(int(v) for v in self.labels))


@dataclass(frozen=True)
class CategoryStats:
    category: int
    components: int
    f_comp: Fraction


@dataclass(frozen=True)
class AttributeFracturedness:
    attribute: str
    f_edge: Fraction
    f_comp: Fraction
    omega: int
    categories: tuple[CategoryStats, ...]


@dataclass(frozen=True)
class FracturednessReport:
    attributes: tuple[AttributeFracturedness, ...]

    def ranking(self) -> list[str]:
        """Attribute names by ascending edge fracturedness, ties in schema order."""
        order = sorted(
            range(len(self.attributes)),
            key=lambda i: (self.attributes[i].f_edge, i),
        )
        return [self.attributes[i].attribute for i in order]

    def ranked_categories(self, attr_name: str) -> list[int]:
        """Category ids by ascending component contribution, ties in schema order."""
        for a in self.attributes:
            if a.attribute == attr_name:
                order = sorted(a.categories, key=lambda c: (c.f_comp, c.category))
                return [c.category for c in order]
        raise DataError(f"unknown attribute {attr_name!r}")


def edge_fracturedness(graph: DelaunayGraph, labeling: Labeling) -> Fraction:
    if not graph.edges:
        raise DataError("edge fracturedness undefined on an empty edge set")
    lab = labeling.labels
    crossing = sum(1 for a, b in graph.edges if lab[a] != lab[b])
    return Fraction(crossing, len(graph.edges))


def category_components(graph: DelaunayGraph, labeling: Labeling, category: int) -> int:
    """Connected components of the subgraph induced by one category's vertices."""
    members = [v for v in range(graph.n) if labeling.labels[v] == category]
    if not members:
        return 0
    member_set = set(members)
    adj = graph.adjacency()
    seen: set[int] = set()
    components = 0
    for start in members:
        if start in seen:
            continue
        components += 1
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in member_set and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return components


def component_fracturedness(
    graph: DelaunayGraph, labeling: Labeling
) -> tuple[Fraction, int, dict[int, Fraction]]:
    """(F_comp, total component count, per-category contributions).

    Categories unobserved on the graph are excluded from the category
    count; with them the measure would be biased by schema entries that
    never appear among the projected subsets.
    """
    observed = labeling.observed_categories
    if graph.n == 0 or not observed:
        raise DataError("component fracturedness undefined on an empty graph")
    comps = {c: category_components(graph, labeling, c) for c in observed}
    omega = sum(comps.values())
    f_comp = 1 - Fraction(len(observed), omega)
    per_category = {c: Fraction(comps[c] - 1, omega) for c in observed}
    return f_comp, omega, per_category


def analyze(graph: DelaunayGraph, subsets: SubsetTable) -> FracturednessReport:
    """Fracturedness of every attribute of a subset table over one graph."""
    entries = []
    for a, name in enumerate(subsets.schema.attributes):
        labeling = Labeling(name, subsets.labels_for(a))
        f_edge = edge_fracturedness(graph, labeling)
        f_comp, omega, per_cat = component_fracturedness(graph, labeling)
        cats = tuple(
            CategoryStats(
                c,
                category_components(graph, labeling, c),
                per_cat[c],
            )
            for c in sorted(per_cat)
        )
        entries.append(AttributeFracturedness(name, f_edge, f_comp, omega, cats))
    return FracturednessReport(tuple(entries))


def report_to_json_dict(report: FracturednessReport, subsets: SubsetTable) -> dict:
    schema = subsets.schema
    attrs = []
    for i, a in enumerate(report.attributes):
        attrs.append(
            {
                "name": a.attribute,
                "fEdge": float(a.f_edge),
                "fComp": float(a.f_comp),
                "omega": a.omega,
                "categories": [
                    {
                        "name": schema.categories[i][c.category],
                        "fComp": float(c.f_comp),
                        "components": c.components,
                    }
                    for c in a.categories
                ],
            }
        )
    return {"attributes": attrs, "rankingEdge": report.ranking()}
