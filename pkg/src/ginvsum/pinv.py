"""Moore-Penrose inverse, its Penrose-equation certificate and the
minimum-norm least-squares solver built on it."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import (
    DEFAULT_TOLERANCE,
    TolerancePolicy,
    as_matrix,
    frobenius_norm,
    inverse_square,
    numerical_rank,
)
from .errors import CertificationError, ShapeError
from .factorization import full_rank_factorize


@dataclass(frozen=True)
class PenroseCertificate:
    """Relative residuals of the four Penrose equations for a candidate X.

    r1: AXA = A, r2: XAX = X, r3: AX hermitian, r4: XA hermitian.
    Each is divided by ``max(1, ...)`` of the natural product scale
    (``|A|^2|X|`` for r1, ``|A||X|^2`` for r2, ``|A||X|`` for r3 and r4).
    """

    r1: float
    r2: float
    r3: float
    r4: float
    tolerance: float

    @property
    def residuals(self):
        return (self.r1, self.r2, self.r3, self.r4)

    @property
    def passed(self) -> bool:
        return all(r <= self.tolerance for r in self.residuals)

    def as_dict(self):
        return {"r1": self.r1, "r2": self.r2, "r3": self.r3, "r4": self.r4, "pass": self.passed}


def certify_penrose(A, X, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> PenroseCertificate:
    A = np.asarray(A, dtype=np.complex128)
    X = np.asarray(X, dtype=np.complex128)
    if X.shape != A.shape[::-1]:
        raise ShapeError(f"candidate of shape {X.shape} cannot invert a {A.shape} matrix")
    na, nx = frobenius_norm(A), frobenius_norm(X)
    AX = A @ X
    XA = X @ A

    def rel(residual, scale):
        return frobenius_norm(residual) / max(1.0, scale)

    return PenroseCertificate(
        r1=rel(AX @ A - A, na * na * nx),
        r2=rel(XA @ X - X, na * nx * nx),
        r3=rel(AX.conj().T - AX, na * nx),
        r4=rel(XA.conj().T - XA, na * nx),
        tolerance=tol.residual_rel_tol,
    )


def _certified(A, X, tol):
    cert = certify_penrose(A, X, tol)
    if not cert.passed:
        raise CertificationError(
            "pseudoinverse candidate failed its Penrose certificate "
            f"(residuals {', '.join(f'{r:.3g}' for r in cert.residuals)})",
            cert,
        )
    return X


def pseudo_inverse(A, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> np.ndarray:
    """Moore-Penrose inverse via a full-rank factorization ``A = F G``:
    ``A^+ = G^* (G G^*)^{-1} (F^* F)^{-1} F^*``.

    The result is checked against the four Penrose equations before it is
    returned; a zero matrix maps to the zero matrix of transposed shape.
    """
    A = as_matrix(A)
    m, n = A.shape
    frf = full_rank_factorize(A, tol)
    if frf.rank == 0:
        return np.zeros((n, m), dtype=np.complex128)
    F, G = frf.F, frf.G
    Fh, Gh = F.conj().T, G.conj().T
    left = inverse_square(Fh @ F, tol) @ Fh
    right = Gh @ inverse_square(G @ Gh, tol)
    return _certified(A, right @ left, tol)


def pseudo_inverse_gram(X, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> np.ndarray:
    """Moore-Penrose inverse through the smaller hermitian Gram matrix,
    ``X^+ = (X^*X)^+ X^* = X^*(XX^*)^+``."""
    X = as_matrix(X)
    Xh = X.conj().T
    if X.shape[0] >= X.shape[1]:
        Y = pseudo_inverse(Xh @ X, tol) @ Xh
    else:
        Y = Xh @ pseudo_inverse(X @ Xh, tol)
    return _certified(X, Y, tol)


class SolutionCase(str, Enum):
    UNIQUE_SOLUTION = "unique-solution"
    MIN_NORM_OF_MANY = "min-norm-of-many"
    UNIQUE_LEAST_SQUARES = "unique-least-squares"
    MIN_NORM_LEAST_SQUARES = "min-norm-least-squares"


@dataclass(frozen=True)
class LeastSquaresResult:
    x0: np.ndarray
    case: SolutionCase
    residual_norm: float
    consistent: bool
    rank: int


def min_norm_least_squares(A, b, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> LeastSquaresResult:
    """Solve ``A x = b`` in the minimum-norm least-squares sense, ``x0 = A^+ b``,
    and classify which of the four textbook situations applies."""
    A = as_matrix(A)
    b = as_matrix(b)
    if b.shape != (A.shape[0], 1):
        raise ShapeError(f"right-hand side must be {A.shape[0]}x1, got {b.shape[0]}x{b.shape[1]}")
    Ap = pseudo_inverse(A, tol)
    x0 = Ap @ b
    residual = frobenius_norm(A @ x0 - b)
    consistent = tol.accepts(residual, frobenius_norm(b))
    rank = numerical_rank(A, tol)
    unique = rank == A.shape[1]
    if consistent:
        case = SolutionCase.UNIQUE_SOLUTION if unique else SolutionCase.MIN_NORM_OF_MANY
    else:
        case = SolutionCase.UNIQUE_LEAST_SQUARES if unique else SolutionCase.MIN_NORM_LEAST_SQUARES
    return LeastSquaresResult(x0, case, residual, consistent, rank)
