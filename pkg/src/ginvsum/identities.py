"""Sufficient conditions for ``(A+B)^+ = A^+ + B^+`` and ``(A+B)^# = A^# + B^#``,
their consequences, and the partial-order difference identities.

Notation in item names: ``X^*`` is the conjugate transpose, ``X^+`` the
Moore-Penrose inverse and ``X^#`` the group inverse.

Every verifier of an identity reports the matching hypothesis alongside it
as informational (``required=False``) items: the hypotheses are sufficient,
not necessary, so the identity verdict is never gated on them.
"""

from __future__ import annotations

from .core import (
    DEFAULT_TOLERANCE,
    TolerancePolicy,
    as_matrix,
    frobenius_norm,
    null_basis,
    require_square,
)
from .errors import NonexistenceError, PreconditionError, ShapeError
from .groupinv import group_exists, group_inverse
from .pinv import pseudo_inverse
from .reports import ConditionReport, ReportBuilder

IDENTITY_HOLDS_WITHOUT_HYPOTHESIS = "identity holds although the sufficient hypothesis fails"
HYPOTHESIS_HOLDS_IDENTITY_FAILS = "hypothesis holds but the identity fails (numerical breakdown?)"


def _pair(A, B, square=False):
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise ShapeError(f"operands must share a shape, got {A.shape} and {B.shape}")
    if square:
        require_square(A, "A")
    return A, B


def _diff_item(rep, name, lhs, *rhs_terms):
    """Residual of ``lhs - sum(sign * M)`` with a sum-of-norms scale."""
    total = lhs.copy()
    scale = frobenius_norm(lhs)
    for sign, M in rhs_terms:
        total -= sign * M
        scale += frobenius_norm(M)
    return rep.add(name, frobenius_norm(total), scale)


def _annotate(rep, hypothesis: ConditionReport, identity_item):
    if identity_item.passed and not hypothesis.overall_pass:
        rep.notes.append(IDENTITY_HOLDS_WITHOUT_HYPOTHESIS)
    elif hypothesis.overall_pass and not identity_item.passed:
        rep.notes.append(HYPOTHESIS_HOLDS_IDENTITY_FAILS)


def _null_inclusions(rep, A, B, prefix):
    tol = rep.tol
    K = null_basis(A, tol)
    rep.add(prefix + "N(A) ⊆ N(B)", frobenius_norm(B @ K), frobenius_norm(B) * frobenius_norm(K))
    Ah, Bh = A.conj().T, B.conj().T
    K = null_basis(Ah, tol)
    rep.add(prefix + "N(A^*) ⊆ N(B^*)", frobenius_norm(Bh @ K), frobenius_norm(Bh) * frobenius_norm(K))


# -- hypotheses ---------------------------------------------------------------


def check_star_conditions(A, B, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> ConditionReport:
    """``AB^* + BB^* = 0`` and ``B^*A + B^*B = 0``; rectangular pairs allowed."""
    A, B = _pair(A, B)
    Bh = B.conj().T
    rep = ReportBuilder("star hypothesis", tol)
    rep.zero("AB^* + BB^* = 0", (1, A, Bh), (1, B, Bh))
    rep.zero("B^*A + B^*B = 0", (1, Bh, A), (1, Bh, B))
    return rep.build()


def check_sharp_conditions(A, B, tol: TolerancePolicy = DEFAULT_TOLERANCE, B_sharp=None) -> ConditionReport:
    """``AB^# + BB^# = 0`` and ``B^#A + B^#B = 0``; raises if ``B^#`` is missing."""
    A, B = _pair(A, B, square=True)
    Bg = group_inverse(B, tol, name="B") if B_sharp is None else B_sharp
    rep = ReportBuilder("sharp hypothesis", tol)
    rep.zero("AB^# + BB^# = 0", (1, A, Bg), (1, B, Bg))
    rep.zero("B^#A + B^#B = 0", (1, Bg, A), (1, Bg, B))
    return rep.build()


def check_star_order(X, Y, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> ConditionReport:
    """Star partial order ``X <=* Y``: ``XX^* = YX^*`` and ``X^*X = X^*Y``."""
    X, Y = _pair(X, Y)
    Xh = X.conj().T
    rep = ReportBuilder("star order", tol)
    rep.zero("XX^* = YX^*", (1, X, Xh), (-1, Y, Xh))
    rep.zero("X^*X = X^*Y", (1, Xh, X), (-1, Xh, Y))
    return rep.build()


def check_sharp_order(X, Y, tol: TolerancePolicy = DEFAULT_TOLERANCE, X_sharp=None) -> ConditionReport:
    """Sharp partial order ``X <=# Y``: ``XX^# = YX^#`` and ``X^#X = X^#Y``."""
    X, Y = _pair(X, Y, square=True)
    Xg = group_inverse(X, tol, name="X") if X_sharp is None else X_sharp
    rep = ReportBuilder("sharp order", tol)
    rep.zero("XX^# = YX^#", (1, X, Xg), (-1, Y, Xg))
    rep.zero("X^#X = X^#Y", (1, Xg, X), (-1, Xg, Y))
    return rep.build()


def _require(report: ConditionReport, what):
    if not report.overall_pass:
        worst = max(report.items, key=lambda item: item.relative)
        raise PreconditionError(f"{what} does not hold ({worst.name}: residual {worst.residual:.6g})", report)


# -- consequences -------------------------------------------------------------


def verify_prelim_properties(A, B, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> ConditionReport:
    """Every consequence of the star hypothesis, one item each, parts (a)-(f).

    Part (e)'s first identity is checked as ``A^+BB^+ = -B^+``; the printed
    variant ``A^+BB^+ = -B`` is listed for square operands as an
    informational item only.
    """
    A, B = _pair(A, B)
    _require(check_star_conditions(A, B, tol), "star hypothesis")
    Ap, Bp = pseudo_inverse(A, tol), pseudo_inverse(B, tol)
    rep = ReportBuilder("star consequences", tol)
    rep.zero("(a) AB^+ + BB^+ = 0", (1, A, Bp), (1, B, Bp))
    rep.zero("(a) B^+A + B^+B = 0", (1, Bp, A), (1, Bp, B))
    _null_inclusions(rep, A, B, "(b) ")
    rep.zero("(c) BA^+ + BB^+ = 0", (1, B, Ap), (1, B, Bp))
    rep.zero("(c) A^+B + B^+B = 0", (1, Ap, B), (1, Bp, B))
    rep.zero("(d) BA^+A = B", (1, B, Ap, A), (-1, B))
    rep.zero("(d) AA^+B = B", (1, A, Ap, B), (-1, B))
    rep.zero("(d) BA^+B = -B", (1, B, Ap, B), (1, B))
    rep.zero("(e) A^+BB^+ = -B^+", (1, Ap, B, Bp), (1, Bp))
    rep.zero("(e) B^+AA^+ = B^+", (1, Bp, A, Ap), (-1, Bp))
    rep.zero("(e) A^+BA^+ + B^+BA^+ = 0", (1, Ap, B, Ap), (1, Bp, B, Ap))
    if A.shape[0] == A.shape[1]:
        rep.zero("(e) A^+BB^+ = -B [as printed]", (1, Ap, B, Bp), (1, B), required=False)
    rep.hermitian("(f) BA^+ hermitian", B, Ap)
    rep.hermitian("(f) A^+B hermitian", Ap, B)
    return rep.build()


def _existence_item(rep, name, M):
    ex = group_exists(M, rep.tol)
    rep.add(name, abs(ex.rank_A - ex.rank_A2), passed=ex.exists)


def verify_prelimgrp_properties(A, B, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> ConditionReport:
    """Consequences of the sharp hypothesis, parts (a)-(e), plus the bridge
    ``A^# B A^# = B^#``."""
    A, B = _pair(A, B, square=True)
    Bg = group_inverse(B, tol, name="B")
    _require(check_sharp_conditions(A, B, tol, B_sharp=Bg), "sharp hypothesis")
    S = A + B
    Ah, Bh = A.conj().T, B.conj().T
    rep = ReportBuilder("sharp consequences", tol)
    _null_inclusions(rep, A, B, "(a) ")
    rep.zero("(b) AB = -B^2", (1, A, B), (1, B, B))
    rep.zero("(b) BA = -B^2", (1, B, A), (1, B, B))
    rep.zero("(b) AB = BA", (1, A, B), (-1, B, A))
    rep.zero("(c) R(A+B) ⊆ N(B)", (1, B, A), (1, B, B))
    rep.zero("(c) R(A^*+B^*) ⊆ N(B^*)", (1, Bh, Ah), (1, Bh, Bh))
    rep.zero("(d) R(B) ⊆ N(A+B)", (1, A, B), (1, B, B))
    rep.zero("(d) R(B^*) ⊆ N(A^*+B^*)", (1, Ah, Bh), (1, Bh, Bh))
    _existence_item(rep, "(e) (A+B)^# exists", S)
    _existence_item(rep, "(e) A^# exists", A)
    _existence_item(rep, "(e) (AB)^# exists", A @ B)
    try:
        Ag = group_inverse(A, tol, name="A")
    except NonexistenceError:
        rep.add("A^#BA^# = B^#", float("inf"), passed=False)
    else:
        rep.zero("A^#BA^# = B^#", (1, Ag, B, Ag), (-1, Bg))
    return rep.build()


# -- sum identities -----------------------------------------------------------


def verify_sum_identity_mp(A, B, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> ConditionReport:
    """Residual of ``(A+B)^+ = A^+ + B^+`` with the star hypothesis alongside."""
    A, B = _pair(A, B)
    rep = ReportBuilder("Moore-Penrose sum identity", tol)
    item = _diff_item(
        rep,
        "(A+B)^+ = A^+ + B^+",
        pseudo_inverse(A + B, tol),
        (1, pseudo_inverse(A, tol)),
        (1, pseudo_inverse(B, tol)),
    )
    hypothesis = check_star_conditions(A, B, tol)
    rep.extend(hypothesis, required=False, prefix="hypothesis: ")
    _annotate(rep, hypothesis, item)
    return rep.build()


def verify_sum_identity_group(A, B, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> ConditionReport:
    """Residual of ``(A+B)^# = A^# + B^#`` with the sharp hypothesis alongside.

    All three group inverses must exist; a NonexistenceError names the
    first missing operand.
    """
    A, B = _pair(A, B, square=True)
    Ag = group_inverse(A, tol, name="A")
    Bg = group_inverse(B, tol, name="B")
    Sg = group_inverse(A + B, tol, name="A+B")
    rep = ReportBuilder("group sum identity", tol)
    item = _diff_item(rep, "(A+B)^# = A^# + B^#", Sg, (1, Ag), (1, Bg))
    hypothesis = check_sharp_conditions(A, B, tol, B_sharp=Bg)
    rep.extend(hypothesis, required=False, prefix="hypothesis: ")
    _annotate(rep, hypothesis, item)
    return rep.build()


def verify_mitra(A, B, kind="star", tol: TolerancePolicy = DEFAULT_TOLERANCE) -> ConditionReport:
    """Difference identity under a partial order: if ``A <= B`` then
    ``(B-A)^o = B^o - A^o`` where ``o`` is ``+`` (star) or ``#`` (sharp)."""
    if kind == "star":
        A, B = _pair(A, B)
        order = check_star_order(A, B, tol)
        rep = ReportBuilder("star-order difference identity", tol)
        item = _diff_item(
            rep,
            "(B-A)^+ = B^+ - A^+",
            pseudo_inverse(B - A, tol),
            (1, pseudo_inverse(B, tol)),
            (-1, pseudo_inverse(A, tol)),
        )
    elif kind == "sharp":
        A, B = _pair(A, B, square=True)
        Ag = group_inverse(A, tol, name="A")
        Bg = group_inverse(B, tol, name="B")
        Dg = group_inverse(B - A, tol, name="B-A")
        order = check_sharp_order(A, B, tol, X_sharp=Ag)
        rep = ReportBuilder("sharp-order difference identity", tol)
        item = _diff_item(rep, "(B-A)^# = B^# - A^#", Dg, (1, Bg), (-1, Ag))
    else:
        raise ValueError(f"kind must be 'star' or 'sharp', got {kind!r}")
    rep.extend(order, required=False, prefix="order A <= B: ")
    _annotate(rep, order, item)
    return rep.build()


def star_equiv_bridge(A, B, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> ConditionReport:
    """Compare the star hypothesis on (A, B) with the star order ``-B <=* A``
    (and the sharp analogues when ``B^#`` exists); the verdicts must agree."""
    A, B = _pair(A, B)
    rep = ReportBuilder("hypothesis / partial-order equivalence", tol)
    hyp = check_star_conditions(A, B, tol)
    order = check_star_order(-B, A, tol)
    rep.extend(hyp, required=False, prefix="star hypothesis: ")
    rep.extend(order, required=False, prefix="-B <=* A: ")
    agree = hyp.overall_pass == order.overall_pass
    rep.add("star verdicts agree", 0.0 if agree else 1.0, passed=agree)

    if A.shape[0] != A.shape[1]:
        return rep.build()
    try:
        Bg = group_inverse(B, tol, name="B")
        negBg = group_inverse(-B, tol, name="-B")
    except NonexistenceError:
        rep.notes.append("B^# does not exist; sharp comparison skipped")
        return rep.build()
    hyp = check_sharp_conditions(A, B, tol, B_sharp=Bg)
    order = check_sharp_order(-B, A, tol, X_sharp=negBg)
    rep.extend(hyp, required=False, prefix="sharp hypothesis: ")
    rep.extend(order, required=False, prefix="-B <=# A: ")
    agree = hyp.overall_pass == order.overall_pass
    rep.add("sharp verdicts agree", 0.0 if agree else 1.0, passed=agree)
    return rep.build()
