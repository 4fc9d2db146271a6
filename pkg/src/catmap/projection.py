"""2-D layouts for subset tables: stress-majorization MDS, MCA, and
force-directed glyph overlap removal.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .dataset import DataError, SubsetTable, encode_all
from .distance import DissimilarityMatrix, DistanceMeasure


@dataclass(frozen=True)
class Layout:
    """Positions of projected subsets plus provenance metadata."""

    positions: np.ndarray
    method: str  # "mds" | "mca"
    measure: DistanceMeasure | None = None
    stress: float | None = None
    iterations_run: int = 0
    overlap_reduced: bool = False
    pre_overlap_positions: np.ndarray | None = None
    degenerate: bool = False
    stress_history: tuple[float, ...] = field(default=(), repr=False)

    def __post_init__(self):
        p = self.positions
        if p.ndim != 2 or p.shape[1] != 2:
            raise DataError("layout positions must be (n, 2)")
        if not np.all(np.isfinite(p)):
            raise DataError("layout contains non-finite coordinates")

    @property
    def n(self) -> int:
        return self.positions.shape[0]


@dataclass(frozen=True)
class MdsConfig:
    max_iterations: int = 300
    epsilon: float = 1e-6  # relative stress-change convergence threshold
    seed: int = 0
    init: str = "classical"  # "classical" | "random"

    def __post_init__(self):
        if self.epsilon <= 0:
            raise DataError("epsilon must be positive")
        if self.max_iterations < 1:
            raise DataError("max_iterations must be >= 1")
        if self.init not in ("classical", "random"):
            raise DataError(f"unknown init {self.init!r}")


def classical_mds(d: np.ndarray, seed: int = 0) -> np.ndarray:
    """Double-centering eigendecomposition initialization (Torgerson).

    A tiny seeded jitter breaks exact rank deficiency so SMACOF never
    starts with coincident points.
    """
    n = d.shape[0]
    j = np.eye(n) - np.ones((n, n)) / n
    b = -0.5 * j @ (d**2) @ j
    evals, evecs = np.linalg.eigh(b)
    order = np.argsort(evals)[::-1][:2]
    top = np.clip(evals[order], 0.0, None)
    pos = evecs[:, order] * np.sqrt(top)
    if np.any(top < 1e-12 * max(top[0], 1.0)):
        rng = np.random.default_rng(seed)
        pos = pos + rng.normal(scale=1e-9, size=pos.shape)
    return pos


def _raw_stress(d: np.ndarray, pos: np.ndarray) -> float:
    delta = np.linalg.norm(pos[:, None, :] - pos[None, :, :], axis=-1)
    return float(np.sum((d - delta) ** 2) / 2.0)


def normalized_layout_stress(d: np.ndarray, pos: np.ndarray) -> float:
    """Raw stress over the squared-distance mass, in [0, ...)."""
    return _raw_stress(d, pos) / (float(np.sum(d**2)) / 2.0)


def mds_project(d: DissimilarityMatrix, cfg: MdsConfig = MdsConfig()) -> Layout:
    """SMACOF stress majorization of a dissimilarity matrix.

    Stress is non-increasing across iterations (majorization guarantee);
    the loop stops when the relative stress change drops below epsilon.
    """
    dm = d.values
    if np.all(dm == 0):
        raise DataError("degenerate input: all pairwise dissimilarities are zero")
    n = d.n
    if cfg.init == "classical":
        pos = classical_mds(dm, seed=cfg.seed)
    else:
        rng = np.random.default_rng(cfg.seed)
        pos = rng.normal(size=(n, 2)) * np.mean(dm)

    history = [_raw_stress(dm, pos)]
    iterations = 0
    for _ in range(cfg.max_iterations):
        delta = np.linalg.norm(pos[:, None, :] - pos[None, :, :], axis=-1)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(delta > 0, dm / delta, 0.0)
        b = -ratio
        np.fill_diagonal(b, 0.0)
        np.fill_diagonal(b, -b.sum(axis=1))
        pos = (b @ pos) / n  # Guttman transform (V^+ = I/n for uniform weights)
        iterations += 1
        stress = _raw_stress(dm, pos)
        history.append(stress)
        prev = history[-2]
        if prev > 0 and (prev - stress) / prev < cfg.epsilon:
            break

    pos = pos - pos.mean(axis=0)
    return Layout(
        positions=pos,
        method="mds",
        measure=d.measure,
        stress=normalized_layout_stress(dm, pos),
        iterations_run=iterations,
        stress_history=tuple(history),
    )


def mca_project(subsets: SubsetTable) -> Layout:
    """Correspondence-analysis SVD of the complete disjunctive matrix.

    Returns row principal coordinates (standard coordinates scaled by
    the axis singular values) on the first two axes.  Axis signs are
    fixed by forcing each axis's largest-magnitude coordinate positive,
    so runs are reproducible.
    """
    if subsets.n_subsets < 2:
        raise DataError("need at least 2 subsets for MCA")
    if subsets.schema.n_attributes < 2:
        raise DataError("need at least 2 attributes for MCA")
    z = encode_all(subsets).astype(float)
    total = z.sum()
    p = z / total
    r = p.sum(axis=1)
    c = p.sum(axis=0)
    keep = c > 0  # categories unobserved among subsets carry no information
    p = p[:, keep]
    c = c[keep]
    resid = (p - np.outer(r, c)) / np.sqrt(np.outer(r, c))
    u, s, _ = np.linalg.svd(resid, full_matrices=False)
    # drop numerically-zero axes before picking the leading two
    nz = s > s[0] * 1e-12 if s[0] > 0 else np.zeros_like(s, dtype=bool)
    u = u[:, nz]
    s = s[nz]
    principal = (u / np.sqrt(r)[:, None]) * s

    degenerate = principal.shape[1] < 2
    if principal.shape[1] == 0:
        raise DataError("degenerate input: residual matrix has rank 0")
    pos = np.zeros((subsets.n_subsets, 2))
    take = min(2, principal.shape[1])
    pos[:, :take] = principal[:, :take]
    for axis in range(take):
        col = pos[:, axis]
        if col[np.argmax(np.abs(col))] < 0:
            pos[:, axis] = -col
    return Layout(positions=pos, method="mca", degenerate=degenerate)


def reduce_overlap(
    layout: Layout,
    radii: np.ndarray,
    iterations: int = 300,
    separation_tolerance: float = 0.01,
) -> Layout:
    """Push glyph discs apart until no pair overlaps beyond tolerance.

    A force loop applies pairwise collision repulsion plus a weak spring
    anchoring each point at its original position; a final hard pass
    resolves any residual overlaps so the separation postcondition
    ||pi - pj|| >= (ri + rj)(1 - tolerance) holds for every pair.
    """
    radii = np.asarray(radii, dtype=float)
    if radii.shape != (layout.n,):
        raise DataError("radii length must match layout size")
    if np.any(~np.isfinite(radii)) or np.any(radii < 0):
        raise DataError("radii must be finite and non-negative")
    original = layout.positions.copy()
    if np.all(radii == 0):
        return replace(
            layout, overlap_reduced=True, pre_overlap_positions=original
        )

    pos = original.copy()
    n = layout.n
    rng = np.random.default_rng(0)
    alpha, decay = 1.0, (0.001) ** (1.0 / iterations)
    spring = 0.02
    for _ in range(iterations):
        disp = np.zeros_like(pos)
        diff = pos[:, None, :] - pos[None, :, :]
        dist = np.linalg.norm(diff, axis=-1)
        target = radii[:, None] + radii[None, :]
        np.fill_diagonal(dist, np.inf)
        overlap = np.where(np.isfinite(dist), target - dist, -1.0)
        mask = overlap > 0
        if mask.any():
            safe = np.where((dist > 1e-12) & np.isfinite(dist), dist, 1.0)
            push = np.where(mask, overlap / safe, 0.0)[..., None] * diff
            coincident = mask & (dist <= 1e-12)
            if coincident.any():
                jitter = rng.normal(scale=1.0, size=diff.shape)
                push = push + np.where(coincident[..., None], jitter, 0.0)
            disp += 0.5 * push.sum(axis=1)
        disp += spring * (original - pos)
        pos = pos + alpha * disp
        alpha *= decay

    # hard resolution: guarantee the separation postcondition
    floor = 1.0 - separation_tolerance
    for _ in range(5000):
        diff = pos[:, None, :] - pos[None, :, :]
        dist = np.linalg.norm(diff, axis=-1)
        target = (radii[:, None] + radii[None, :]) * floor
        np.fill_diagonal(dist, np.inf)
        viol = np.argwhere(np.triu(dist < target, k=1))
        if len(viol) == 0:
            break
        for i, j in viol:
            d = float(np.linalg.norm(pos[i] - pos[j]))
            need = (radii[i] + radii[j]) - d
            if need <= 0:
                continue
            if d <= 1e-12:
                direction = rng.normal(size=2)
                direction /= np.linalg.norm(direction)
            else:
                direction = (pos[i] - pos[j]) / d
            pos[i] += 0.5 * (need + 1e-9) * direction
            pos[j] -= 0.5 * (need + 1e-9) * direction
    else:
        raise RuntimeError("overlap resolution did not converge")

    return replace(
        layout,
        positions=pos,
        overlap_reduced=True,
        pre_overlap_positions=original,
    )


def normalize_layout(
    layout: Layout, width: float, height: float, padding: float = 0.0
) -> Layout:
    """Uniformly scale and translate into a padded viewport."""
    if layout.n < 1:
        raise DataError("cannot normalize an empty layout")
    pos = layout.positions
    lo = pos.min(axis=0)
    hi = pos.max(axis=0)
    span = hi - lo
    avail = np.array([width - 2 * padding, height - 2 * padding])
    scale_candidates = [avail[k] / span[k] for k in range(2) if span[k] > 0]
    scale = min(scale_candidates) if scale_candidates else 1.0
    center_in = (lo + hi) / 2
    center_out = np.array([width / 2, height / 2])
    new = (pos - center_in) * scale + center_out
    pre = layout.pre_overlap_positions
    if pre is not None:
        pre = (pre - center_in) * scale + center_out
    return replace(layout, positions=new, pre_overlap_positions=pre)
