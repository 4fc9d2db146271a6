"""Common-category analysis of a subset selection.

Given a set of selected subset ids, the attributes split into those on
which the selection is uniform (common) and the rest (distinct); every
subset agreeing with all common categories is a match, selected or not.
Attribute order follows the edge-fracturedness ranking when one is
supplied, otherwise schema order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dataset import DataError, SubsetTable


@dataclass(frozen=True)
class SelectionResult:
    selected: tuple[int, ...]
    common: dict[str, str]  # attribute -> category, uniform over selection
    distinct: tuple[str, ...]
    matching: tuple[int, ...]


def common_categories(
    subsets: SubsetTable,
    selection: set[int],
    attribute_order: list[str] | None = None,
) -> SelectionResult:
    if not selection:
        raise DataError("selection must not be empty")
    for i in selection:
        if not 0 <= i < subsets.n_subsets:
            raise DataError(f"unknown subset id {i}")

    schema = subsets.schema
    order = attribute_order if attribute_order is not None else list(schema.attributes)
    if sorted(order) != sorted(schema.attributes):
        raise DataError("attribute order must be a permutation of the schema attributes")

    selected = tuple(sorted(selection))
    chosen = [subsets.assignments[i] for i in selected]
    common: dict[str, str] = {}
    common_idx: dict[int, int] = {}
    distinct: list[str] = []
    for name in order:
        a = schema.attributes.index(name)
        values = {row[a] for row in chosen}
        if len(values) == 1:
            c = values.pop()
            common[name] = schema.categories[a][c]
            common_idx[a] = c
        else:
            distinct.append(name)

    matching = tuple(
        i
        for i, assignment in enumerate(subsets.assignments)
        if all(assignment[a] == c for a, c in common_idx.items())
    )
    return SelectionResult(selected, common, tuple(distinct), matching)


def selection_to_json_dict(result: SelectionResult) -> dict:
    return {
        "selected": list(result.selected),
        "common": [{"attribute": a, "category": c} for a, c in result.common.items()],
        "distinct": list(result.distinct),
        "matching": list(result.matching),
    }
