"""Pairwise dissimilarities between categorical subsets.

All five measures are functions of the intersection size k between the
descriptor sets of two items.  With a attributes per item (both sets have
cardinality a):

    overlap    1 - k/a
    jaccard    1 - k/(2a - k)
    dice       1 - k/a          (reduces to overlap for equal cardinality)
    manhattan  2(a - k)         (one-hot L1)
    euclidean  sqrt(2(a - k))   (one-hot L2)

Set similarities are returned as dissimilarities (1 - similarity) because
the projection stage consumes distances.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass

import numpy as np

from .dataset import DataError, EncodedItem, SubsetTable, encode_all


class DistanceMeasure(enum.Enum):
    OVERLAP = "overlap"
    JACCARD = "jaccard"
    DICE = "dice"
    MANHATTAN = "manhattan"
    EUCLIDEAN = "euclidean"

    @classmethod
    def parse(cls, name: str) -> "DistanceMeasure":
        try:
            return cls(name.lower())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise DataError(f"unknown distance measure {name!r} (one of: {valid})") from None


def _from_intersection(k, a, measure: DistanceMeasure):
    k = np.asarray(k, dtype=float)
    if measure is DistanceMeasure.OVERLAP or measure is DistanceMeasure.DICE:
        return 1.0 - k / a
    if measure is DistanceMeasure.JACCARD:
        return 1.0 - k / (2.0 * a - k)
    if measure is DistanceMeasure.MANHATTAN:
        return 2.0 * (a - k)
    if measure is DistanceMeasure.EUCLIDEAN:
        return np.sqrt(2.0 * (a - k))
    raise DataError(f"unhandled measure {measure}")


def distance(x: EncodedItem, y: EncodedItem, measure: DistanceMeasure) -> float:
    """Dissimilarity between two encoded items under one measure."""
    if len(x.onehot_form) != len(y.onehot_form):
        raise DataError("items encoded under different schemas")
    a = len(x.set_form)
    if len(y.set_form) != a:
        raise DataError("items encoded under different schemas")
    k = len(x.set_form & y.set_form)
    return float(_from_intersection(k, a, measure))


@dataclass(frozen=True)
class DissimilarityMatrix:
    """Symmetric pairwise dissimilarities with zero diagonal."""

    values: np.ndarray
    measure: DistanceMeasure

    def __post_init__(self):
        v = self.values
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise DataError("dissimilarity matrix must be square")
        if not np.all(np.isfinite(v)):
            raise DataError("dissimilarity matrix contains non-finite values")
        if np.any(v < 0) or np.any(np.diag(v) != 0) or not np.array_equal(v, v.T):
            raise DataError("matrix must be symmetric, non-negative, zero-diagonal")

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def condensed(self) -> np.ndarray:
        """Upper-triangle entries, row-major."""
        iu = np.triu_indices(self.n, k=1)
        return self.values[iu]


def build_matrix(subsets: SubsetTable, measure: DistanceMeasure) -> DissimilarityMatrix:
    """Full pairwise dissimilarity matrix over a subset table.

    Intersection counts come from one Gram product of the one-hot matrix.
    """
    if subsets.n_subsets < 2:
        raise DataError("need at least 2 subsets to build a dissimilarity matrix")
    onehot = encode_all(subsets).astype(float)
    k = onehot @ onehot.T
    a = subsets.schema.n_attributes
    values = _from_intersection(k, a, measure)
    np.fill_diagonal(values, 0.0)
    values = (values + values.T) / 2.0  # exact symmetry against fp noise
    return DissimilarityMatrix(values, measure)


def export_csv(matrix: DissimilarityMatrix, path) -> None:
    np.savetxt(path, matrix.values, delimiter=",", fmt="%.17g")


def export_binary(matrix: DissimilarityMatrix, path) -> None:
    """Row-major little-endian float64 dump with an 8-byte size header."""
    with open(path, "wb") as f:
        f.write(struct.pack("<q", matrix.n))
        f.write(matrix.values.astype("<f8").tobytes(order="C"))


def load_binary(path) -> np.ndarray:
    with open(path, "rb") as f:
        (n,) = struct.unpack("<q", f.read(8))
        data = np.frombuffer(f.read(), dtype="<f8")
    return data.reshape(n, n)
