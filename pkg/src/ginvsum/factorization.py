"""Full-rank factorization ``A = F @ G`` from complete-pivoting elimination."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOLERANCE, TolerancePolicy, eliminate


@dataclass(frozen=True)
class FullRankFactorization:
    F: np.ndarray  # m x r, full column rank
    G: np.ndarray  # r x n, full row rank

    @property
    def rank(self) -> int:
        return self.F.shape[1]

    def product(self) -> np.ndarray:
        return self.F @ self.G


def full_rank_factorize(A, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> FullRankFactorization:
    """Factor ``A`` as ``F @ G`` with ``r = numerical_rank(A)`` inner columns.

    ``F`` is the row-unpermuted unit lower factor and ``G`` the
    column-unpermuted upper factor. Rank zero yields ``m x 0`` and ``0 x n``
    factors.
    """
    A = np.asarray(A, dtype=np.complex128)
    m, n = A.shape
    el = eliminate(A, tol)
    F = np.empty((m, el.rank), dtype=np.complex128)
    F[el.rows] = el.L
    G = np.empty((el.rank, n), dtype=np.complex128)
    G[:, el.cols] = el.U
    return FullRankFactorization(F, G)
