"""Dense complex matrix kernels.

Matrices are plain 2-D ``numpy.ndarray`` values of dtype ``complex128``.
Products and norms lean on numpy; everything that makes a rank decision
(rank, elimination, square inversion, null bases) is done by explicit
Gaussian elimination so the thresholds are under our control.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError, SingularMatrixError

DEFAULT_RANK_REL_TOL = 1e-10
DEFAULT_RESIDUAL_REL_TOL = 1e-8


@dataclass(frozen=True)
class TolerancePolicy:
    """Thresholds for rank decisions and for accepting identities.

    Both are relative: ``rank_rel_tol`` is scaled by the largest entry
    magnitude of the matrix being eliminated, ``residual_rel_tol`` by
    ``max(1, scale)`` of whatever residual is being judged.
    """

    rank_rel_tol: float = DEFAULT_RANK_REL_TOL
    residual_rel_tol: float = DEFAULT_RESIDUAL_REL_TOL

    def __post_init__(self):
        for name in ("rank_rel_tol", "residual_rel_tol"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise ValueError(f"{name} must lie in (0, 1), got {value!r}")

    def accepts(self, residual, scale=1.0):
        return residual <= self.residual_rel_tol * max(1.0, scale)


DEFAULT_TOLERANCE = TolerancePolicy()


def as_matrix(data) -> np.ndarray:
    """Coerce ``data`` into a finite complex128 2-D array (copying)."""
    A = np.array(data, dtype=np.complex128)
    if A.ndim == 1:
        A = A.reshape(-1, 1)
    if A.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got {A.ndim} dimensions")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    return A


def conj_transpose(A: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(A)).T


def mat_mul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape[1] != B.shape[0]:
        raise ShapeError(f"cannot multiply {A.shape[0]}x{A.shape[1]} by {B.shape[0]}x{B.shape[1]}")
    return A @ B


def frobenius_norm(A: np.ndarray) -> float:
    A = np.asarray(A)
    if A.size == 0:
        return 0.0
    return float(np.linalg.norm(A))


def require_square(A: np.ndarray, what="matrix"):
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError(f"{what} must be square, got shape {A.shape}")


def _pivot_threshold(A, tol, scale=None):
    if scale is None:
        scale = float(np.max(np.abs(A))) if A.size else 0.0
    return tol.rank_rel_tol * (scale if scale > 0.0 else 1.0)


@dataclass(frozen=True)
class Elimination:
    """Result of complete-pivoting elimination ``A[rows][:, cols] ~= L @ U``.

    ``L`` is ``m x rank`` unit lower trapezoidal, ``U`` is ``rank x n`` upper
    trapezoidal, ``rows``/``cols`` are the row and column permutations.
    """

    rows: np.ndarray
    cols: np.ndarray
    L: np.ndarray
    U: np.ndarray
    rank: int


def eliminate(A: np.ndarray, tol: TolerancePolicy = DEFAULT_TOLERANCE, scale=None) -> Elimination:
    """Gaussian elimination with complete pivoting, stopped at the rank threshold.

    Pivots at or below ``rank_rel_tol * scale`` count as zero. ``scale``
    defaults to the largest entry magnitude of ``A``; pass a bound on the
    operands when ``A`` is a computed product, otherwise a product that is
    pure roundoff (e.g. the square of a nilpotent) looks full rank.
    """
    W = np.array(A, dtype=np.complex128)
    m, n = W.shape
    rows = np.arange(m)
    cols = np.arange(n)
    threshold = _pivot_threshold(W, tol, scale)
    r = 0
    for k in range(min(m, n)):
        sub = np.abs(W[k:, k:])
        flat = int(np.argmax(sub))
        i, j = divmod(flat, n - k)
        if sub[i, j] <= threshold:
            break
        i += k
        j += k
        if i != k:
            W[[k, i], :] = W[[i, k], :]
            rows[[k, i]] = rows[[i, k]]
        if j != k:
            W[:, [k, j]] = W[:, [j, k]]
            cols[[k, j]] = cols[[j, k]]
        W[k + 1:, k] /= W[k, k]
        W[k + 1:, k + 1:] -= np.outer(W[k + 1:, k], W[k, k + 1:])
        r += 1
    L = np.tril(W[:, :r], -1) + np.eye(m, r, dtype=np.complex128)
    U = np.triu(W[:r, :])
    return Elimination(rows, cols, L, U, r)


def numerical_rank(A: np.ndarray, tol: TolerancePolicy = DEFAULT_TOLERANCE, scale=None) -> int:
    return eliminate(A, tol, scale).rank


def _back_substitute(U: np.ndarray, B: np.ndarray) -> np.ndarray:
    # U square upper triangular and nonsingular; B may have many columns
    n = U.shape[0]
    X = np.array(B, dtype=np.complex128)
    for k in range(n - 1, -1, -1):
        X[k] = (X[k] - U[k, k + 1:] @ X[k + 1:]) / U[k, k]
    return X


def null_basis(A: np.ndarray, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> np.ndarray:
    """Basis of N(A) as the columns of an ``n x (n - rank)`` matrix.

    Built from the free variables of the eliminated system and normalised
    to unit columns. Not orthogonal.
    """
    A = np.asarray(A)
    n = A.shape[1]
    el = eliminate(A, tol)
    r = el.rank
    if r == n:
        return np.zeros((n, 0), dtype=np.complex128)
    Z = np.zeros((n, n - r), dtype=np.complex128)
    Z[r:] = np.eye(n - r)
    if r:
        Z[:r] = -_back_substitute(el.U[:, :r], el.U[:, r:])
    K = np.empty_like(Z)
    K[el.cols] = Z
    return K / np.linalg.norm(K, axis=0)


def inverse_square(A: np.ndarray, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> np.ndarray:
    """Inverse by Gauss-Jordan elimination with partial pivoting.

    Raises SingularMatrixError when a pivot drops below the rank threshold or
    the result fails ``max(|AX - I|, |XA - I|) <= tol * max(1, |A||X|)``.
    """
    A = np.asarray(A, dtype=np.complex128)
    require_square(A)
    n = A.shape[0]
    threshold = _pivot_threshold(A, tol)
    W = np.hstack([A, np.eye(n, dtype=np.complex128)])
    for k in range(n):
        i = k + int(np.argmax(np.abs(W[k:, k])))
        if abs(W[i, k]) <= threshold:
            raise SingularMatrixError(f"matrix is singular (pivot {k} below {threshold:.3g})")
        if i != k:
            W[[k, i]] = W[[i, k]]
        W[k] /= W[k, k]
        factors = W[:, k].copy()
        factors[k] = 0.0
        W -= np.outer(factors, W[k])
    X = W[:, n:]
    eye = np.eye(n)
    err = max(frobenius_norm(A @ X - eye), frobenius_norm(X @ A - eye))
    if not tol.accepts(err, frobenius_norm(A) * frobenius_norm(X)):
        raise SingularMatrixError(f"matrix is numerically singular (inverse residual {err:.3g})")
    return X
