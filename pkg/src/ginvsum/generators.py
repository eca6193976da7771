"""Matrix pairs that satisfy the star or sharp hypotheses by construction.

Families:

* ``star-2x2``: ``A = [[a, b], [-b, alpha3]]``, ``B = [[b, -b], [b, -alpha3]]``
  with ``(a + b) * conj(b) = 0``.
* ``star-bordered``: repeated bordering ``M = [[A, u], [v^*, alpha]]``,
  ``N = [[B, -u], [-v^*, -alpha]]`` with ``(A+B)^* u = 0`` and ``(A+B) v = 0``.
* ``sharp-case1``: ``A = [[-b, alpha1], [0, -b - alpha1]]``, ``B = [[b, b], [0, 0]]``.
* ``sharp-case2``: ``A = diag(a, -beta3)``, ``B = diag(0, beta3)``.
* ``sharp-block``: block-diagonal stack of the two sharp families.

Every emitted pair carries the hypothesis report evaluated at generation
time; construction fails loudly rather than emit an uncertified pair.
Random pairs are reproducible: the same ``(kind, order, seed)`` yields
bit-identical matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .core import DEFAULT_TOLERANCE, TolerancePolicy, as_matrix, frobenius_norm, null_basis
from .errors import CertificationError, ConstraintError, PreconditionError
from .identities import check_sharp_conditions, check_sharp_order, check_star_conditions, check_star_order
from .reports import ConditionReport

STAR = "star"
SHARP = "sharp"

ENRICH_ATTEMPTS = 5
MAX_SIMILARITY_STRETCH = 10.0  # condition number bound for random similarities


@dataclass(frozen=True)
class PairRecipe:
    family: str
    params: dict = field(default_factory=dict)
    size: int = 2
    seed: int | None = None

    def as_dict(self):
        return {
            "family": self.family,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "size": self.size,
            "seed": self.seed,
        }


def _jsonable(value):
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


@dataclass(frozen=True)
class GeneratedPair:
    A: np.ndarray
    B: np.ndarray
    certificate: ConditionReport
    recipe: PairRecipe

    def as_dict(self):
        return {"recipe": self.recipe.as_dict(), "certificate": self.certificate.as_dict()}


def _check(kind, A, B, tol):
    if kind == STAR:
        return check_star_conditions(A, B, tol)
    return check_sharp_conditions(A, B, tol)


def _certify(kind, A, B, recipe, tol):
    report = _check(kind, A, B, tol)
    if not report.overall_pass:
        raise CertificationError(f"generated {recipe.family} pair failed its {kind} certificate", report)
    return GeneratedPair(A, B, report, recipe)


def _nonzero(x, tol):
    return abs(x) > tol.rank_rel_tol


# -- explicit families ---------------------------------------------------------


def gen_star_pair_2x2(a, b, alpha3, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> GeneratedPair:
    a, b, alpha3 = complex(a), complex(b), complex(alpha3)
    lhs = abs((a + b) * b.conjugate())
    if not tol.accepts(lhs, abs(a) * abs(b) + abs(b) ** 2):
        raise ConstraintError(f"star 2x2 family needs (a+b)*conj(b) = 0, got |.| = {lhs:.6g}")
    A = as_matrix([[a, b], [-b, alpha3]])
    B = as_matrix([[b, -b], [b, -alpha3]])
    recipe = PairRecipe("star-2x2", {"a": a, "b": b, "alpha3": alpha3})
    return _certify(STAR, A, B, recipe, tol)


def border_star_pair(A, B, u1, v1, alpha, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> GeneratedPair:
    """Grow a star pair by one row and column.

    ``u1`` must lie in ``N((A+B)^*)`` and ``v1`` in ``N(A+B)``; the new
    corner entries are ``alpha`` and ``-alpha``.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    u1 = as_matrix(u1)
    v1 = as_matrix(v1)
    m, n = A.shape
    if u1.shape != (m, 1) or v1.shape != (n, 1):
        raise PreconditionError(f"bordering vectors must be {m}x1 and {n}x1, got {u1.shape} and {v1.shape}")
    base = check_star_conditions(A, B, tol)
    if not base.overall_pass:
        raise PreconditionError("(A, B) does not satisfy the star hypothesis", base)
    S = A + B
    ns = frobenius_norm(S)
    res_u = frobenius_norm(S.conj().T @ u1)
    if not tol.accepts(res_u, ns * frobenius_norm(u1)):
        raise PreconditionError(f"(A+B)^* u1 = 0 fails (residual {res_u:.6g})")
    res_v = frobenius_norm(S @ v1)
    if not tol.accepts(res_v, ns * frobenius_norm(v1)):
        raise PreconditionError(f"(A+B) v1 = 0 fails (residual {res_v:.6g})")
    alpha = complex(alpha)
    M = np.block([[A, u1], [v1.conj().T, np.full((1, 1), alpha)]])
    N = np.block([[B, -u1], [-v1.conj().T, np.full((1, 1), -alpha)]])
    recipe = PairRecipe(
        "star-bordered",
        {"u1": list(u1.ravel()), "v1": list(v1.ravel()), "alpha": alpha},
        size=max(M.shape),
    )
    return _certify(STAR, M, N, recipe, tol)


def gen_sharp_pair_case1(b, alpha1, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> GeneratedPair:
    b, alpha1 = complex(b), complex(alpha1)
    if not _nonzero(b, tol):
        raise ConstraintError("sharp case-1 family needs b != 0")
    A = as_matrix([[-b, alpha1], [0, -b - alpha1]])
    B = as_matrix([[b, b], [0, 0]])
    recipe = PairRecipe("sharp-case1", {"a": -b, "b": b, "alpha1": alpha1})
    return _certify(SHARP, A, B, recipe, tol)


def gen_sharp_pair_case2(a, beta3, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> GeneratedPair:
    """Case-2 family in its consistent form: the constraint system forces
    ``beta1 = 0``, leaving ``A = diag(a, -beta3)`` and ``B = diag(0, beta3)``."""
    a, beta3 = complex(a), complex(beta3)
    if not _nonzero(a, tol):
        raise ConstraintError("sharp case-2 family needs a != 0")
    if not _nonzero(beta3, tol):
        raise ConstraintError("sharp case-2 family needs beta3 != 0")
    if not _nonzero(a + beta3, tol):
        raise ConstraintError("sharp case-2 family needs beta3 != -a")
    A = as_matrix([[a, 0], [0, -beta3]])
    B = as_matrix([[0, 0], [0, beta3]])
    recipe = PairRecipe("sharp-case2", {"a": a, "beta3": beta3, "beta1": 0j})
    return _certify(SHARP, A, B, recipe, tol)


# -- randomisation -------------------------------------------------------------


def _gaussian(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_unitary(n, rng) -> np.ndarray:
    """Haar-distributed unitary from the QR factorization of a complex Gaussian."""
    if n == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    Q, R = np.linalg.qr(_gaussian(rng, n, n))
    d = np.diag(R)
    return Q * (d / np.abs(d))


def random_similarity(n, rng, stretch=MAX_SIMILARITY_STRETCH):
    """Random ``(S, S^{-1})`` with condition number at most ``stretch``."""
    U = random_unitary(n, rng)
    V = random_unitary(n, rng)
    s = rng.uniform(1.0, stretch, n)
    S = (U * s) @ V.conj().T
    S_inv = (V / s) @ U.conj().T
    return S, S_inv


def _scalar(rng, low=0.5, high=2.0):
    return complex(rng.uniform(low, high) * np.exp(2j * np.pi * rng.uniform()))


def conjugate_pair(pair: GeneratedPair, kind, left, right, tol: TolerancePolicy = DEFAULT_TOLERANCE, seed=None):
    """Apply ``X -> left @ X @ right`` to both matrices and re-certify.

    For the star kind ``left`` and ``right`` must be unitary (``U`` and
    ``V^*``); for the sharp kind they must be ``S`` and ``S^{-1}``.
    """
    A = left @ pair.A @ right
    B = left @ pair.B @ right
    recipe = replace(pair.recipe, seed=pair.recipe.seed if seed is None else seed)
    return _certify(kind, A, B, recipe, tol)


def enrich_pair(pair: GeneratedPair, kind, seed, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> GeneratedPair:
    """Densify a certified pair by a random transformation that preserves
    its hypothesis: ``(UAV^*, UBV^*)`` for star, ``(SAS^{-1}, SBS^{-1})`` for sharp."""
    rng = np.random.default_rng(seed)
    m, n = pair.A.shape
    last = None
    for _ in range(ENRICH_ATTEMPTS):
        if kind == STAR:
            left, right = random_unitary(m, rng), random_unitary(n, rng).conj().T
        elif kind == SHARP:
            left, right = random_similarity(n, rng)
        else:
            raise ValueError(f"kind must be 'star' or 'sharp', got {kind!r}")
        try:
            return conjugate_pair(pair, kind, left, right, tol, seed=seed)
        except CertificationError as exc:
            last = exc
    raise CertificationError(f"enrichment failed after {ENRICH_ATTEMPTS} attempts", last.certificate)


def _random_null_vector(S, rng, tol):
    K = null_basis(S, tol)
    while True:
        v = K @ _gaussian(rng, K.shape[1], 1)
        nv = np.linalg.norm(v)
        if nv > 1e-3:
            return v * (rng.uniform(0.5, 2.0) / nv)


def _random_star_pair(order, rng, seed, tol):
    a = _scalar(rng)
    b = -a if rng.uniform() < 0.25 else 0j
    pair = gen_star_pair_2x2(a, b, _scalar(rng), tol)
    params = dict(pair.recipe.params)
    steps = []
    while pair.A.shape[0] < order:
        S = pair.A + pair.B
        u1 = _random_null_vector(S.conj().T, rng, tol)
        v1 = _random_null_vector(S, rng, tol)
        alpha = complex(np.exp(2j * np.pi * rng.uniform()))
        pair = border_star_pair(pair.A, pair.B, u1, v1, alpha, tol)
        steps.append(pair.recipe.params)
    family = "star-bordered" if steps else "star-2x2"
    if steps:
        params = {"base": params, "borders": steps}
    return replace(pair, recipe=PairRecipe(family, params, order, seed))


def _random_sharp_block(rng, tol):
    if rng.uniform() < 0.5:
        b = _scalar(rng)
        alpha1 = -b if rng.uniform() < 0.15 else _scalar(rng)
        while alpha1 != -b and abs(alpha1 + b) < 0.25:
            alpha1 = _scalar(rng)
        return gen_sharp_pair_case1(b, alpha1, tol)
    a = _scalar(rng)
    beta3 = _scalar(rng)
    while abs(a + beta3) < 0.25:
        beta3 = _scalar(rng)
    return gen_sharp_pair_case2(a, beta3, tol)


def _random_sharp_pair(order, rng, seed, tol):
    blocks_A, blocks_B, params = [], [], []
    size = 0
    while size < order:
        if order - size == 1:
            a = _scalar(rng)
            if rng.uniform() < 0.5:
                blocks_A.append(np.array([[a]]))
                blocks_B.append(np.zeros((1, 1)))
            else:
                blocks_A.append(np.array([[-a]]))
                blocks_B.append(np.array([[a]]))
            params.append({"family": "scalar", "a": blocks_A[-1][0, 0], "b": blocks_B[-1][0, 0]})
            size += 1
        else:
            block = _random_sharp_block(rng, tol)
            blocks_A.append(block.A)
            blocks_B.append(block.B)
            params.append({"family": block.recipe.family, **block.recipe.params})
            size += 2
    A = _block_diag(blocks_A)
    B = _block_diag(blocks_B)
    return _certify(SHARP, A, B, PairRecipe("sharp-block", {"blocks": params}, order, seed), tol)


def _block_diag(blocks):
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n), dtype=np.complex128)
    k = 0
    for b in blocks:
        d = b.shape[0]
        out[k:k + d, k:k + d] = b
        k += d
    return out


def random_certified_pair(kind, order, seed, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> GeneratedPair:
    """Seeded random pair of the given order satisfying the ``kind`` hypothesis.

    Star pairs are grown from a 2x2 base by repeated bordering; sharp pairs
    stack 2x2 sharp families (plus a scalar block for odd orders) on the
    diagonal. Both are then densified with ``enrich_pair``.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    root = np.random.SeedSequence(seed)
    build_seq, enrich_seq = root.spawn(2)
    rng = np.random.default_rng(build_seq)
    if kind == STAR:
        pair = _random_star_pair(order, rng, seed, tol)
    elif kind == SHARP:
        pair = _random_sharp_pair(order, rng, seed, tol)
    else:
        raise ValueError(f"kind must be 'star' or 'sharp', got {kind!r}")
    enriched = enrich_pair(pair, kind, enrich_seq, tol)
    return replace(enriched, recipe=replace(enriched.recipe, seed=seed))


def random_order_pair(kind, order, seed, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> GeneratedPair:
    """Seeded pair with ``A <= B`` in the star or sharp partial order.

    Star: ``A = U diag(D1, 0, 0) V^*`` and ``B = U diag(D1, D2, 0) V^*``.
    Sharp: ``A = S diag(J1, 0, 0) S^{-1}`` and ``B = S diag(J1, J2, 0) S^{-1}``
    with invertible blocks ``J1``, ``J2``. Block sizes are random; the
    certificate is the order report for ``(A, B)``.
    """
    rng = np.random.default_rng(seed)
    k = int(rng.integers(0, order + 1))
    j = int(rng.integers(k, order + 1))
    if kind == STAR:
        d = np.array([_scalar(rng) for _ in range(order)])
        dA = np.where(np.arange(order) < k, d, 0)
        dB = np.where(np.arange(order) < j, d, 0)
        U, V = random_unitary(order, rng), random_unitary(order, rng)
        A = (U * dA) @ V.conj().T
        B = (U * dB) @ V.conj().T
        report = check_star_order(A, B, tol)
    elif kind == SHARP:
        J1 = _well_conditioned(k, rng)
        J2 = _well_conditioned(j - k, rng)
        zeros = np.zeros((order - j, order - j))
        S, S_inv = random_similarity(order, rng)
        A = S @ _block_diag([J1, np.zeros((j - k, j - k)), zeros]) @ S_inv
        B = S @ _block_diag([J1, J2, zeros]) @ S_inv
        report = check_sharp_order(A, B, tol)
    else:
        raise ValueError(f"kind must be 'star' or 'sharp', got {kind!r}")
    recipe = PairRecipe(f"{kind}-order", {"rank_A": k, "rank_B": j}, order, seed)
    if not report.overall_pass:
        raise CertificationError(f"generated {kind}-order pair failed its certificate", report)
    return GeneratedPair(A, B, report, recipe)


def _well_conditioned(n, rng):
    if n == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    return (random_unitary(n, rng) * rng.uniform(1.0, 3.0, n)) @ random_unitary(n, rng).conj().T
