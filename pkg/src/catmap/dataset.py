"""Categorical table ingestion and subset aggregation.

A categorical table assigns exactly one category per attribute to every
row.  Rows are deduplicated into frequency-weighted *subsets*: the unique
category combinations that all downstream stages (distances, projection,
tessellation, metrics) operate on.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field

import numpy as np

MISSING_CATEGORY = "<missing>"


class DataError(ValueError):
    """Raised for malformed or degenerate input data."""


@dataclass(frozen=True)
class AttributeSchema:
    """Attribute names plus the ordered categories observed for each.

    Category order is first-appearance order, which keeps one-hot layouts
    and glyph segment order stable across runs.  Qualified descriptors
    ``"attr=category"`` are globally unique and map to dense integer ids.
    """

    attributes: tuple[str, ...]
    categories: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if len(self.attributes) != len(self.categories):
            raise DataError("attribute/category list length mismatch")
        for attr, cats in zip(self.attributes, self.categories):
            if not cats:
                raise DataError(f"attribute {attr!r} has no categories")
        seen = set()
        for d in self.descriptors():
            if d in seen:
                raise DataError(f"duplicate qualified descriptor {d!r}")
            seen.add(d)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    @property
    def total_categories(self) -> int:
        """One-hot dimensionality: sum of category counts over attributes."""
        return sum(len(c) for c in self.categories)

    def block_offsets(self) -> list[int]:
        """Start index of each attribute's block in the one-hot layout."""
        offsets, pos = [], 0
        for cats in self.categories:
            offsets.append(pos)
            pos += len(cats)
        return offsets

    def descriptors(self) -> list[str]:
        """All qualified descriptors in dense-id order."""
        return [
            f"{attr}={cat}"
            for attr, cats in zip(self.attributes, self.categories)
            for cat in cats
        ]

    def descriptor_id(self, attr_index: int, cat_index: int) -> int:
        return self.block_offsets()[attr_index] + cat_index

    def category_index(self, attr_index: int, category: str) -> int:
        try:
            return self.categories[attr_index].index(category)
        except ValueError:
            raise DataError(
                f"unknown category {category!r} for attribute "
                f"{self.attributes[attr_index]!r}"
            ) from None


@dataclass(frozen=True)
class CategoricalTable:
    """Raw rows, each a full assignment of one category index per attribute."""

    schema: AttributeSchema
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.schema.n_attributes
        for r, row in enumerate(self.rows):
            if len(row) != n:
                raise DataError(f"row {r} has {len(row)} values, expected {n}")
            for a, c in enumerate(row):
                if not 0 <= c < len(self.schema.categories[a]):
                    raise DataError(f"row {r}: category index {c} out of range")

    @property
    def row_count(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class SubsetTable:
    """Unique category combinations with frequencies; the projected entities."""

    schema: AttributeSchema
    assignments: tuple[tuple[int, ...], ...]
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignments) != len(self.counts):
            raise DataError("assignment/count length mismatch")
        if len(set(self.assignments)) != len(self.assignments):
            raise DataError("duplicate assignments in subset table")
        if any(c < 1 for c in self.counts):
            raise DataError("subset frequencies must be >= 1")

    @property
    def n_subsets(self) -> int:
        return len(self.assignments)

    @property
    def total_count(self) -> int:
        return sum(self.counts)

    def relative_counts(self) -> np.ndarray:
        return np.asarray(self.counts, dtype=float) / self.total_count

    def labels_for(self, attr_index: int) -> np.ndarray:
        """Category index of every subset for one attribute."""
        return np.array([a[attr_index] for a in self.assignments], dtype=int)

    def describe(self, subset_id: int) -> list[str]:
        """Qualified descriptors of one subset, in attribute order."""
        return [
            f"{self.schema.attributes[a]}={self.schema.categories[a][c]}"
            for a, c in enumerate(self.assignments[subset_id])
        ]


@dataclass(frozen=True)
class EncodedItem:
    """Set and one-hot encodings of a single assignment."""

    set_form: frozenset[int]
    onehot_form: np.ndarray = field(compare=False)


def _looks_numeric(values) -> bool:
    def is_num(v):
        try:
            float(v)
            return True
        except ValueError:
            return False

    observed = [v for v in values if v != MISSING_CATEGORY]
    return bool(observed) and all(is_num(v) for v in observed)


def load_csv(
    path,
    delimiter: str = ",",
    missing_token: str = "",
    numeric_as_categorical: bool = False,
) -> CategoricalTable:
    """Load a categorical table from a headered CSV file.

    Missing-value tokens become an explicit per-attribute category so
    every row keeps one category per attribute.  Fully numeric columns
    are rejected unless ``numeric_as_categorical`` is set.
    """
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f, delimiter=delimiter)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError("empty file: missing header row") from None
        raw_rows = []
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise DataError(
                    f"line {lineno}: expected {len(header)} columns, got {len(row)}"
                )
            raw_rows.append(
                [MISSING_CATEGORY if v == missing_token else v for v in row]
            )
    if not raw_rows:
        raise DataError("empty table: no data rows")

    if not numeric_as_categorical:
        for j, name in enumerate(header):
            if _looks_numeric([r[j] for r in raw_rows]):
                raise DataError(
                    f"column {name!r} looks numeric; pass "
                    "numeric_as_categorical=True to treat it as categorical"
                )

    categories: list[list[str]] = [[] for _ in header]
    index: list[dict[str, int]] = [{} for _ in header]
    rows = []
    for raw in raw_rows:
        row = []
        for j, v in enumerate(raw):
            if v not in index[j]:
                index[j][v] = len(categories[j])
                categories[j].append(v)
            row.append(index[j][v])
        rows.append(tuple(row))

    schema = AttributeSchema(tuple(header), tuple(tuple(c) for c in categories))
    return CategoricalTable(schema, tuple(rows))


def deduplicate(table: CategoricalTable) -> SubsetTable:
    """Collapse rows into unique assignments with frequencies.

    Subset order is first-appearance order of each assignment.
    """
    if table.row_count == 0:
        raise DataError("cannot deduplicate an empty table")
    order: dict[tuple[int, ...], int] = {}
    counts: list[int] = []
    for row in table.rows:
        if row in order:
            counts[order[row]] += 1
        else:
            order[row] = len(counts)
            counts.append(1)
    return SubsetTable(table.schema, tuple(order), tuple(counts))


def expand(subsets: SubsetTable) -> CategoricalTable:
    """Inverse of :func:`deduplicate`: repeat each assignment by its count."""
    rows = []
    for assignment, count in zip(subsets.assignments, subsets.counts):
        rows.extend([assignment] * count)
    return CategoricalTable(subsets.schema, tuple(rows))


def encode(assignment: tuple[int, ...], schema: AttributeSchema) -> EncodedItem:
    """Encode one assignment as a descriptor-id set and a one-hot vector."""
    if len(assignment) != schema.n_attributes:
        raise DataError("assignment length does not match schema")
    offsets = schema.block_offsets()
    ids = []
    for a, c in enumerate(assignment):
        if not 0 <= c < len(schema.categories[a]):
            raise DataError(f"unknown category id {c} for attribute index {a}")
        ids.append(offsets[a] + c)
    onehot = np.zeros(schema.total_categories, dtype=np.int8)
    onehot[ids] = 1
    return EncodedItem(frozenset(ids), onehot)


def encode_all(subsets: SubsetTable) -> np.ndarray:
    """One-hot matrix of all subsets, shape (n_subsets, total_categories)."""
    mat = np.zeros((subsets.n_subsets, subsets.schema.total_categories), dtype=np.int8)
    offsets = subsets.schema.block_offsets()
    for i, assignment in enumerate(subsets.assignments):
        for a, c in enumerate(assignment):
            mat[i, offsets[a] + c] = 1
    return mat


def subset_table_to_json(subsets: SubsetTable) -> str:
    doc = {
        "schema": {
            "attributes": [
                {"name": attr, "categories": list(cats)}
                for attr, cats in zip(subsets.schema.attributes, subsets.schema.categories)
            ]
        },
        "subsets": [
            {"id": i, "values": list(assignment), "count": count}
            for i, (assignment, count) in enumerate(
                zip(subsets.assignments, subsets.counts)
            )
        ],
        "total": subsets.total_count,
    }
    return json.dumps(doc, indent=2)
