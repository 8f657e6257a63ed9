"""Cyclic Jacobi diagonalization of real symmetric matrices.

Kept in-repo so the brute-force validation path carries no linear-algebra
dependency and produces identical spectra on every run: rotations are
applied in a fixed cyclic order, skipping entries already below threshold,
until the largest off-diagonal entry falls below ``rel_tol`` times the
matrix scale.
"""

from __future__ import annotations

import math

import numpy as np


class JacobiConvergenceError(RuntimeError):
    """Sweep cap exhausted before the off-diagonal residual target."""

    def __init__(self, message: str, *, residual: float, sweeps: int):
        super().__init__(message)
        self.residual = residual
        self.sweeps = sweeps


def _offdiag_max(a: np.ndarray) -> float:
    n = a.shape[0]
    if n < 2:
        return 0.0
    mask = ~np.eye(n, dtype=bool)
    return float(np.abs(a[mask]).max())


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    apq = a[p, q]
    app, aqq = a[p, p], a[q, q]
    theta = 0.5 * (aqq - app) / apq
    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    # exact annihilation of the target entry; diagonal via the stable update
    a[p, p] = app - t * apq
    a[q, q] = aqq + t * apq
    a[p, q] = 0.0
    a[q, p] = 0.0

    vec_p = v[:, p].copy()
    vec_q = v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def jacobi_eigh(
    matrix: np.ndarray,
    *,
    rel_tol: float = 1e-13,
    max_sweeps: int = 60,
) -> tuple[np.ndarray, np.ndarray, float]:
    """Full spectrum of a real symmetric matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors, residual)`` with eigenvalues
    ascending, eigenvectors in matching columns and ``residual`` the final
    off-diagonal maximum relative to the matrix scale.

    Raises:
        ValueError: non-square or non-symmetric input.
        JacobiConvergenceError: residual target not met in ``max_sweeps``.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    scale = float(np.abs(a).max()) if n else 0.0
    if scale == 0.0:
        return np.zeros(n), np.eye(n), 0.0
    if float(np.abs(a - a.T).max()) > 1e-12 * scale:
        raise ValueError("matrix must be symmetric")
    a = 0.5 * (a + a.T)

    v = np.eye(n)
    thresh = rel_tol * scale
    converged = False
    sweeps = 0
    while True:
        if _offdiag_max(a) <= thresh:
            converged = True
            break
        if sweeps == max_sweeps:
            break
        for p in range(n - 1):
            hits = np.flatnonzero(np.abs(a[p, p + 1 :]) > thresh) + p + 1
            for q in hits:
                if abs(a[p, q]) > thresh:  # may have shrunk mid-sweep
                    _rotate(a, v, p, int(q))
        sweeps += 1

    residual = _offdiag_max(a) / scale
    if not converged:
        raise JacobiConvergenceError(
            f"no convergence after {max_sweeps} sweeps (residual {residual:.3e})",
            residual=residual,
            sweeps=sweeps,
        )
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order], residual
