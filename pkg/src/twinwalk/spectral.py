"""Symmetric eigendecomposition into spectral projectors, integrality tests,
and a series-based matrix exponential used as an independent oracle.

The eigensolver is a cyclic Jacobi sweep: robust at the small dimensions this
library targets (n <= 64) and guaranteed to produce orthogonal eigenvectors
on symmetric input. Eigenvalues closer than a clustering tolerance are merged
into a single distinct value whose projector is the sum of the rank-one
projectors over the cluster, so degenerate eigenspaces are only ever handled
through their (basis-independent) projector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailureError

DEFAULT_CLUSTER_TOL = 1e-8
DEFAULT_INT_TOL = 1e-6

_JACOBI_OFFDIAG_FACTOR = 1e-13
_JACOBI_MAX_SWEEPS = 100

_ORACLE_TAYLOR_DEGREE = 18
_ORACLE_TARGET_NORM = 0.5


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues (ascending) with orthogonal spectral projectors."""

    n: int
    values: np.ndarray            # shape (k,), ascending
    projectors: list[np.ndarray]  # k symmetric n x n matrices
    multiplicities: list[int]     # k positive ints summing to n


def _offdiag_norm(A: np.ndarray) -> float:
    off = A - np.diag(np.diag(A))
    return float(np.sqrt((off * off).sum()))


def _jacobi(L: np.ndarray, max_sweeps: int) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi rotations. Returns (eigenvalues, eigenvector columns)."""
    A = np.array(L, dtype=float)
    n = A.shape[0]
    V = np.eye(n)
    fro = float(np.sqrt((A * A).sum()))
    threshold = _JACOBI_OFFDIAG_FACTOR * fro
    if _offdiag_norm(A) <= threshold:
        return np.diag(A).copy(), V
    for _ in range(max_sweeps):
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                # Stable rotation angle (Golub & Van Loan).
                tau = (A[q, q] - A[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rp = A[p, :].copy()
                rq = A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                cp = A[:, p].copy()
                cq = A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                A[p, q] = 0.0
                A[q, p] = 0.0
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
        if _offdiag_norm(A) <= threshold:
            return np.diag(A).copy(), V
    raise ConvergenceFailureError(
        f"off-diagonal norm {_offdiag_norm(A):.3e} above {threshold:.3e} "
        f"after {max_sweeps} sweeps"
    )


def eigendecompose(
    L: np.ndarray,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    max_sweeps: int = _JACOBI_MAX_SWEEPS,
) -> Spectrum:
    """Decompose a symmetric matrix into distinct eigenvalues and projectors.

    Eigenvalues within cluster_tol * max(1, ||L||_F) of each other are merged
    into one distinct value (their mean); the merged projector is the sum of
    v v^T over the cluster's orthonormal eigenvectors.
    """
    if cluster_tol <= 0:
        raise ValueError("cluster_tol must be positive")
    L = np.asarray(L, dtype=float)
    n = L.shape[0]
    raw, V = _jacobi(L, max_sweeps)
    order = np.argsort(raw)
    raw = raw[order]
    V = V[:, order]
    gap = cluster_tol * max(1.0, float(np.sqrt((L * L).sum())))

    values: list[float] = []
    projectors: list[np.ndarray] = []
    multiplicities: list[int] = []
    start = 0
    for i in range(1, n + 1):
        if i == n or raw[i] - raw[i - 1] > gap:
            block = V[:, start:i]
            values.append(float(raw[start:i].mean()))
            projectors.append(block @ block.T)
            multiplicities.append(i - start)
            start = i
    return Spectrum(n, np.array(values), projectors, multiplicities)


def is_integral_spectrum(s: Spectrum, int_tol: float = DEFAULT_INT_TOL) -> bool:
    """True iff every distinct eigenvalue is within int_tol of an integer."""
    if int_tol <= 0:
        raise ValueError("int_tol must be positive")
    return bool(np.all(np.abs(s.values - np.round(s.values)) <= int_tol))


def matrix_exp_oracle(H: np.ndarray, t: float) -> np.ndarray:
    """exp(-i t H) by scaling-and-squaring on the truncated power series.

    Independent of the spectral route: no eigendecomposition is involved.
    The exponent is scaled so its Frobenius norm is at most 0.5, a degree-18
    Taylor polynomial is summed, and the result is squared back up.
    """
    H = np.asarray(H, dtype=float)
    n = H.shape[0]
    X = -1j * t * H.astype(complex)
    norm = float(np.sqrt((np.abs(X) ** 2).sum()))
    s = 0
    if norm > _ORACLE_TARGET_NORM:
        s = int(np.ceil(np.log2(norm / _ORACLE_TARGET_NORM)))
        X = X / (2.0**s)
    U = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, _ORACLE_TAYLOR_DEGREE + 1):
        term = term @ X / k
        U = U + term
    for _ in range(s):
        U = U @ U
    return U
