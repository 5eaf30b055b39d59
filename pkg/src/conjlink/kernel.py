"""Dense linear algebra behind the pair scores.

Everything here is a pure function of its inputs. Matrices are plain
``numpy.ndarray`` objects; adjacency-derived ones are symmetric with a zero
diagonal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import tolerances
from .graph import Graph

__all__ = [
    "SpectralEstimate",
    "ConvergenceError",
    "DivergentSeriesError",
    "walk_sum",
    "dominant_eigenvalue",
    "check_series_convergence",
    "inverse_i_minus_alpha_a",
    "laplacian",
    "effective_resistance",
    "resistance_matrix",
]


class ConvergenceError(RuntimeError):
    """Power iteration did not reach the requested residual."""


class DivergentSeriesError(ArithmeticError):
    """The geometric walk series sum (alpha A)^r does not converge."""

    def __init__(self, alpha, lambda_max):
        self.alpha = alpha
        self.lambda_max = lambda_max
        self.product = alpha * lambda_max
        super().__init__(
            f"walk series diverges: alpha * lambda_max = {alpha:.6g} * "
            f"{lambda_max:.6g} = {self.product:.6g} >= 1; use a finite horizon "
            f"or a smaller alpha (< {1.0 / lambda_max:.6g})"
        )


@dataclass(frozen=True)
class SpectralEstimate:
    lambda_max: float
    iterations: int
    residual: float


def walk_sum(A, alpha: float, p: int) -> np.ndarray:
    """Weighted walk counts ``sum_{r=2}^{p} (alpha A)^r``.

    Evaluated Horner-style as ``M^2 (I + M (I + M (...)))`` with ``M = alpha A``,
    so only one running product is kept.
    """
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    A = np.asarray(A, dtype=float)
    M = alpha * A
    n = A.shape[0]
    acc = np.eye(n)
    for _ in range(p - 2):
        acc = M @ acc
        acc[np.diag_indices(n)] += 1.0
    return M @ (M @ acc)


def dominant_eigenvalue(A, tol: float = tolerances.EIG_TOL,
                        max_iter: int = tolerances.EIG_MAX_ITER) -> SpectralEstimate:
    """Largest eigenvalue of a symmetric nonnegative matrix by power iteration.

    Starts from the normalized all-ones vector. The iteration runs on
    ``A + s I`` (``s`` = largest entry magnitude) so that bipartite graphs,
    whose spectrum contains ``-lambda_max``, still converge; for nonnegative
    ``A`` the Perron root is also the largest-magnitude eigenvalue.

    Raises
    ------
    ConvergenceError
        If the residual ``||Av - lambda v|| / ||v||`` stays above ``tol``.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if n == 0:
        return SpectralEstimate(0.0, 0, 0.0)
    shift = float(np.abs(A).max()) if A.size else 0.0
    if shift == 0.0:
        return SpectralEstimate(0.0, 0, 0.0)
    v = np.ones(n) / math.sqrt(n)
    residual = math.inf
    lam = 0.0
    for it in range(1, max_iter + 1):
        av = A @ v
        lam = float(v @ av)
        residual = float(np.linalg.norm(av - lam * v))
        if residual <= tol:
            return SpectralEstimate(lam, it, residual)
        w = av + shift * v
        v = w / np.linalg.norm(w)
    raise ConvergenceError(
        f"power iteration stalled at residual {residual:.3g} after {max_iter} "
        f"iterations (lambda ~ {lam:.6g}); fall back to finite-horizon scoring"
    )


def check_series_convergence(A, alpha: float) -> SpectralEstimate:
    """Return the spectral estimate, raising if ``alpha * lambda_max`` is not safely below 1."""
    est = dominant_eigenvalue(A)
    if alpha * est.lambda_max >= 1.0 - tolerances.CONVERGENCE_MARGIN:
        raise DivergentSeriesError(alpha, est.lambda_max)
    return est


def inverse_i_minus_alpha_a(A, alpha: float) -> np.ndarray:
    """Closed form of ``sum_{r>=0} (alpha A)^r``, i.e. ``(I - alpha A)^{-1}``.

    The inverse exists for many ``alpha`` where the series does not converge;
    those cases are refused rather than returning a meaningless matrix.
    """
    A = np.asarray(A, dtype=float)
    check_series_convergence(A, alpha)
    n = A.shape[0]
    eye = np.eye(n)
    return np.linalg.solve(eye - alpha * A, eye)


def laplacian(A) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    return np.diag(A.sum(axis=1)) - A


def effective_resistance(g: Graph, i: int, j: int) -> float:
    """Resistance between ``i`` and ``j`` when every edge is a unit resistor.

    Unit current is injected at ``i`` with ``j`` grounded; the potential at
    ``i`` is the resistance. Nodes in different components are infinitely far
    apart.
    """
    if i == j:
        raise ValueError("effective resistance needs two distinct nodes")
    g.neighbors(i), g.neighbors(j)  # range checks
    comp = next(c for c in g.connected_components() if i in c)
    if j not in comp:
        return math.inf
    ids = sorted(comp)
    pos = {v: k for k, v in enumerate(ids)}
    L = laplacian(g.adjacency()[np.ix_(ids, ids)])
    keep = [k for k in range(len(ids)) if k != pos[j]]
    Lg = L[np.ix_(keep, keep)]
    rhs = np.zeros(len(keep))
    ki = keep.index(pos[i])
    rhs[ki] = 1.0
    try:
        x = np.linalg.solve(Lg, rhs)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - connected => nonsingular
        raise RuntimeError("grounded Laplacian of a connected component is singular") from exc
    return float(x[ki])


def resistance_matrix(g: Graph) -> np.ndarray:
    """All-pairs effective resistance, ``inf`` across components, 0 on the diagonal.

    Each component is grounded once at its smallest node; with ``X`` the
    inverse grounded Laplacian (zero row/column at the ground),
    ``R_ij = X_ii + X_jj - 2 X_ij``.
    """
    n = g.N
    R = np.full((n, n), math.inf)
    A = g.adjacency()
    for comp in g.connected_components():
        ids = sorted(comp)
        k = len(ids)
        if k == 1:
            R[ids[0], ids[0]] = 0.0
            continue
        L = laplacian(A[np.ix_(ids, ids)])
        X = np.zeros((k, k))
        X[1:, 1:] = np.linalg.solve(L[1:, 1:], np.eye(k - 1))
        d = np.diag(X)
        R[np.ix_(ids, ids)] = d[:, None] + d[None, :] - 2.0 * X
    np.fill_diagonal(R, 0.0)
    return R
