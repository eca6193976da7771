"""Group inverse: existence test, computation, certificate, and the
range/null-space characterization check."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOLERANCE,
    TolerancePolicy,
    as_matrix,
    frobenius_norm,
    inverse_square,
    null_basis,
    numerical_rank,
    require_square,
)
from .errors import CertificationError, NonexistenceError, ShapeError, SingularMatrixError
from .factorization import full_rank_factorize
from .pinv import pseudo_inverse
from .reports import ConditionReport, ReportBuilder


@dataclass(frozen=True)
class GroupExistenceReport:
    rank_A: int
    rank_A2: int

    @property
    def exists(self) -> bool:
        return self.rank_A == self.rank_A2


@dataclass(frozen=True)
class GroupCertificate:
    """Relative residuals of AXA = A (g1), XAX = X (g2) and AX = XA (g3)."""

    g1: float
    g2: float
    g3: float
    tolerance: float

    @property
    def residuals(self):
        return (self.g1, self.g2, self.g3)

    @property
    def passed(self) -> bool:
        return all(g <= self.tolerance for g in self.residuals)

    def as_dict(self):
        return {"g1": self.g1, "g2": self.g2, "g3": self.g3, "pass": self.passed}


def group_exists(A, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> GroupExistenceReport:
    A = as_matrix(A)
    require_square(A)
    norm = frobenius_norm(A)
    return GroupExistenceReport(numerical_rank(A, tol), numerical_rank(A @ A, tol, scale=norm * norm))


def certify_group(A, X, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> GroupCertificate:
    A = np.asarray(A, dtype=np.complex128)
    X = np.asarray(X, dtype=np.complex128)
    require_square(A)
    if X.shape != A.shape:
        raise ShapeError(f"candidate of shape {X.shape} does not match {A.shape}")
    na, nx = frobenius_norm(A), frobenius_norm(X)
    AX = A @ X
    XA = X @ A
    return GroupCertificate(
        g1=frobenius_norm(AX @ A - A) / max(1.0, na * na * nx),
        g2=frobenius_norm(XA @ X - X) / max(1.0, na * nx * nx),
        g3=frobenius_norm(AX - XA) / max(1.0, na * nx),
        tolerance=tol.residual_rel_tol,
    )


def group_inverse(A, tol: TolerancePolicy = DEFAULT_TOLERANCE, name="A") -> np.ndarray:
    """Group inverse ``F (G F)^{-2} G`` for a full-rank factorization ``A = F G``.

    Exists iff ``G F`` is invertible; otherwise raises NonexistenceError
    tagged with ``name``.
    """
    A = as_matrix(A)
    require_square(A, name)
    frf = full_rank_factorize(A, tol)
    r = frf.rank
    if r == 0:
        return np.zeros_like(A)
    GF = frf.G @ frf.F
    if numerical_rank(GF, tol, scale=frobenius_norm(frf.G) * frobenius_norm(frf.F)) < r:
        raise NonexistenceError(f"group inverse of {name} does not exist (rank(A^2) < rank(A))", name)
    try:
        inv = inverse_square(GF, tol)
    except SingularMatrixError as exc:
        raise NonexistenceError(f"group inverse of {name} does not exist ({exc})", name) from exc
    X = frf.F @ (inv @ inv) @ frf.G
    cert = certify_group(A, X, tol)
    if not cert.passed:
        raise CertificationError(
            f"group inverse candidate for {name} failed its certificate "
            f"(residuals {', '.join(f'{g:.3g}' for g in cert.residuals)})",
            cert,
        )
    return X


def verify_group_characterization(C, X, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> ConditionReport:
    """Check that X acts as the group inverse of C on range and null space:

    (i)   X kills a basis of N(C) and rank(X) = rank(C);
    (ii)  for every range basis vector p, q = Xp lies in R(C) and Cq = p;
    (iii) for every range basis vector q, X(Cq) = q.

    The range basis is the F factor of a full-rank factorization of C;
    residuals of each check are aggregated over all basis vectors.
    """
    C = as_matrix(C)
    X = as_matrix(X)
    require_square(C, "C")
    if X.shape != C.shape:
        raise ShapeError(f"X of shape {X.shape} does not match C of shape {C.shape}")
    rep = ReportBuilder("group-inverse characterization", tol)
    nx, nc = frobenius_norm(X), frobenius_norm(C)

    K = null_basis(C, tol)
    rep.add("null: X kills N(C)", frobenius_norm(X @ K), nx * frobenius_norm(K))
    rank_c, rank_x = numerical_rank(C, tol), numerical_rank(X, tol)
    rep.add("null: rank(X) = rank(C)", abs(rank_x - rank_c), passed=rank_x == rank_c)

    F = full_rank_factorize(C, tol).F
    if F.shape[1]:
        F = F / np.linalg.norm(F, axis=0)
        Q = X @ F
        proj = F @ pseudo_inverse(F, tol)
        rep.add("range: Xp lies in R(C)", frobenius_norm(proj @ Q - Q), frobenius_norm(Q))
        rep.add("range: C(Xp) = p", frobenius_norm(C @ Q - F), nc * frobenius_norm(Q) + frobenius_norm(F))
        rep.add("range: X(Cq) = q", frobenius_norm(X @ (C @ F) - F), (nx * nc + 1.0) * frobenius_norm(F))
    else:
        for label in ("range: Xp lies in R(C)", "range: C(Xp) = p", "range: X(Cq) = q"):
            rep.add(label, 0.0)
    return rep.build()
