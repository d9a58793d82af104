"""Interval principal component analysis on centered-and-reduced midpoints.

The pipeline: take the midpoint of every interval cell, standardize the
midpoint matrix to Z (zero-mean, unit-norm columns, so Zt·Z is the midpoint
correlation matrix), and eigendecompose either Z·Zt (``pca_zzt``) or Zt·Z
(``pca_ztz``). Each path solves one eigenproblem and recovers the other
eigenvector family by the duality transports, then projects the interval
bounds onto the appropriate family with the signed-weight rule:

* interval scores of the objects come from projecting object rows onto the
  variable-side eigenvectors U (in the unit-variance scale of the data),
* interval correlations of the variables come from projecting variable
  columns of Z's bounds onto the object-side eigenvectors V.

``pca_auto`` picks whichever path has the smaller eigenproblem. Both paths
agree on every output up to roundoff; midpoint (classical) scores and
correlations always fall inside their interval counterparts.

Interval correlations are stored raw. Hypercube vertices can leave the unit
ball, so an endpoint can exceed 1 in magnitude; ``clamp_correlations``
restricts them to [-1, 1] for reporting and plotting.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DataError
from .intervals import BoundsPair, IntervalMatrix, interval_project
from .linalg import (
    EigenDecomposition,
    dual_u_from_v,
    dual_v_from_u,
    eigen_sym,
)

__all__ = [
    "StandardizedBundle",
    "PcaResult",
    "centers_matrix",
    "standardize",
    "pca_zzt",
    "pca_ztz",
    "pca_auto",
    "interval_scores_raw",
    "clamp_correlations",
    "flip_component",
    "result_to_dict",
    "result_to_json",
]

_COMPONENT_PREFIX = "PC"


@dataclass(frozen=True, eq=False)
class StandardizedBundle:
    """Standardized midpoint matrix with matching interval bounds.

    ``z`` has zero-mean columns of unit Euclidean norm (population standard
    deviation with an extra 1/sqrt(m) factor); ``bounds`` applies the same
    affine map to the lower/upper interval bounds, so bounds.low <= z <=
    bounds.high elementwise.
    """

    z: np.ndarray
    bounds: BoundsPair
    col_means: np.ndarray
    col_stds: np.ndarray
    m: int
    n: int


@dataclass(frozen=True, eq=False)
class PcaResult:
    """Everything both analysis paths produce.

    ``loadings_u`` (n x q) are eigenvectors of Zt·Z; ``axes_v`` (m x q) are
    eigenvectors of Z·Zt. ``scores`` and ``correlations`` are interval
    matrices; ``center_scores`` / ``center_correlations`` are their
    classical midpoint counterparts and always lie inside them.
    """

    eigenvalues: np.ndarray
    loadings_u: np.ndarray
    axes_v: np.ndarray
    scores: IntervalMatrix
    correlations: IntervalMatrix
    center_scores: np.ndarray
    center_correlations: np.ndarray
    method_used: str


def centers_matrix(x: IntervalMatrix) -> np.ndarray:
    """Midpoint of every cell: (lo + hi) / 2."""
    return (x.lo + x.hi) / 2.0


def standardize(x: IntervalMatrix) -> StandardizedBundle:
    """Center and reduce the midpoint matrix, mapping bounds alongside.

    Entry (i, j) of z is (mid_ij - mean_j) / (sqrt(m) * std_j) with std the
    population standard deviation (divisor m) of midpoint column j; the same
    map is applied to the lower and upper bounds. Every column of z then has
    zero mean and unit norm, and Zt·Z is the midpoint correlation matrix.

    Raises DataError when m < 2 or a midpoint column is constant.
    """
    m, n = x.shape
    if m < 2:
        raise DataError(f"need at least 2 rows to standardize, got {m}")
    mids = centers_matrix(x)
    means = mids.mean(axis=0)
    stds = mids.std(axis=0)
    for j in range(n):
        if stds[j] == 0.0 or mids[:, j].min() == mids[:, j].max():
            raise DataError(
                f"column {x.cols[j]!r} is constant (zero variance); "
                "it cannot be standardized"
            )
    scale = 1.0 / (math.sqrt(m) * stds)
    z = (mids - means) * scale
    low = (x.lo - means) * scale
    high = (x.hi - means) * scale
    return StandardizedBundle(
        z=z,
        bounds=BoundsPair(low, high),
        col_means=means,
        col_stds=stds,
        m=m,
        n=n,
    )


def _component_labels(q: int) -> tuple[str, ...]:
    return tuple(f"{_COMPONENT_PREFIX}{k + 1}" for k in range(q))


def _resolve_q(eig: EigenDecomposition, q: int | None) -> int:
    rank = eig.positive_count
    if rank == 0:
        raise DataError("data has no positive-variance directions")
    if q is None:
        return rank
    if not 1 <= q <= rank:
        raise DataError(f"q={q} out of range: must be between 1 and rank {rank}")
    return q


def _assemble(
    x: IntervalMatrix,
    bundle: StandardizedBundle,
    lam: np.ndarray,
    u: np.ndarray,
    v: np.ndarray,
    method: str,
) -> PcaResult:
    pcs = _component_labels(lam.size)
    # Scores live in the unit-variance scale of the data: project the
    # centered-reduced bounds, i.e. sqrt(m) times the unit-norm ones.
    score_bounds = bundle.bounds.scaled(math.sqrt(bundle.m))
    scores = interval_project(score_bounds, u, rows=x.rows, cols=pcs)
    correlations = interval_project(
        bundle.bounds.transposed, v, rows=x.cols, cols=pcs
    )
    center_scores = (math.sqrt(bundle.m) * bundle.z) @ u
    center_correlations = bundle.z.T @ v
    return PcaResult(
        eigenvalues=lam,
        loadings_u=u,
        axes_v=v,
        scores=scores,
        correlations=correlations,
        center_scores=center_scores,
        center_correlations=center_correlations,
        method_used=method,
    )


def pca_zzt(x: IntervalMatrix, q: int | None = None) -> PcaResult:
    """Interval PCA solving the m x m eigenproblem of Z·Zt.

    The object-side eigenvectors V come straight from the decomposition;
    the variable-side family U is recovered per component by the duality
    transport Zt·v / sqrt(lam).
    """
    bundle = standardize(x)
    eig = eigen_sym(bundle.z @ bundle.z.T)
    q = _resolve_q(eig, q)
    lam = eig.values[:q].copy()
    v = eig.vectors[:, :q].copy()
    u = np.column_stack(
        [dual_u_from_v(bundle.z, v[:, k], lam[k]) for k in range(q)]
    )
    return _assemble(x, bundle, lam, u, v, "zzt")


def pca_ztz(x: IntervalMatrix, q: int | None = None) -> PcaResult:
    """Interval PCA solving the n x n eigenproblem of Zt·Z.

    Mirror of ``pca_zzt``: U is solved directly, V is recovered by the
    transport Z·u / sqrt(lam).
    """
    bundle = standardize(x)
    eig = eigen_sym(bundle.z.T @ bundle.z)
    q = _resolve_q(eig, q)
    lam = eig.values[:q].copy()
    u = eig.vectors[:, :q].copy()
    v = np.column_stack(
        [dual_v_from_u(bundle.z, u[:, k], lam[k]) for k in range(q)]
    )
    return _assemble(x, bundle, lam, u, v, "ztz")


def pca_auto(x: IntervalMatrix, q: int | None = None) -> PcaResult:
    """Dispatch to whichever path factors the smaller matrix.

    With m objects and n variables, m <= n makes the m x m product the
    cheaper eigenproblem (``pca_zzt``); otherwise the n x n product wins
    (``pca_ztz``). Both paths produce the same numbers.
    """
    m, n = x.shape
    return pca_zzt(x, q) if m <= n else pca_ztz(x, q)


def interval_scores_raw(x: IntervalMatrix, q: int | None = None) -> IntervalMatrix:
    """Centers-only interval scores: no reduction, covariance eigenvectors.

    Centers the midpoint matrix by column means, eigendecomposes the raw
    cross-product (the covariance matrix up to a factor of m), and projects
    the centered interval bounds onto its eigenvectors. This is the original
    midpoint method the duality pipeline extends; kept for comparison.
    """
    m, n = x.shape
    if m < 2:
        raise DataError(f"need at least 2 rows, got {m}")
    mids = centers_matrix(x)
    means = mids.mean(axis=0)
    centered = mids - means
    eig = eigen_sym(centered.T @ centered)
    q = _resolve_q(eig, q)
    u = eig.vectors[:, :q]
    bounds = BoundsPair(x.lo - means, x.hi - means)
    return interval_project(bounds, u, rows=x.rows, cols=_component_labels(q))


def clamp_correlations(table: IntervalMatrix, limit: float = 1.0) -> IntervalMatrix:
    """Clip interval endpoints to [-limit, limit] (default the unit ball)."""
    return IntervalMatrix(
        table.rows,
        table.cols,
        np.clip(table.lo, -limit, limit),
        np.clip(table.hi, -limit, limit),
    )


def flip_component(result: PcaResult, k: int) -> PcaResult:
    """Negate component k throughout: eigenvector columns flip sign and
    every interval column k maps [a, b] -> [-b, -a].

    Useful for aligning orientations before comparing against published
    values, which fix no eigenvector sign.
    """
    if not 0 <= k < result.eigenvalues.size:
        raise DataError(f"component index {k} out of range")

    def flip_cols(mat: np.ndarray) -> np.ndarray:
        out = mat.copy()
        out[:, k] = -out[:, k]
        return out

    def flip_intervals(table: IntervalMatrix) -> IntervalMatrix:
        lo = table.lo.copy()
        hi = table.hi.copy()
        lo[:, k], hi[:, k] = -table.hi[:, k], -table.lo[:, k]
        return IntervalMatrix(table.rows, table.cols, lo, hi)

    return replace(
        result,
        loadings_u=flip_cols(result.loadings_u),
        axes_v=flip_cols(result.axes_v),
        scores=flip_intervals(result.scores),
        correlations=flip_intervals(result.correlations),
        center_scores=flip_cols(result.center_scores),
        center_correlations=flip_cols(result.center_correlations),
    )


def _interval_payload(table: IntervalMatrix) -> dict:
    return {
        "rows": list(table.rows),
        "cols": list(table.cols),
        "lo": table.lo.tolist(),
        "hi": table.hi.tolist(),
    }


def _matrix_payload(rows, cols, values: np.ndarray) -> dict:
    return {"rows": list(rows), "cols": list(cols), "values": values.tolist()}


def result_to_dict(result: PcaResult, clamp: bool = True) -> dict:
    """JSON-ready mapping; correlations are clamped unless ``clamp=False``."""
    correlations = (
        clamp_correlations(result.correlations) if clamp else result.correlations
    )
    return {
        "method_used": result.method_used,
        "eigenvalues": result.eigenvalues.tolist(),
        "scores": _interval_payload(result.scores),
        "correlations": _interval_payload(correlations),
        "center_scores": _matrix_payload(
            result.scores.rows, result.scores.cols, result.center_scores
        ),
        "center_correlations": _matrix_payload(
            result.correlations.rows, result.correlations.cols,
            result.center_correlations,
        ),
    }


def result_to_json(result: PcaResult, clamp: bool = True, indent: int = 2) -> str:
    return json.dumps(result_to_dict(result, clamp=clamp), indent=indent)
