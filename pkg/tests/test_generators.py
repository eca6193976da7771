import numpy as np
import pytest

from ginvsum import (
    ConstraintError,
    PreconditionError,
    border_star_pair,
    check_sharp_conditions,
    check_star_conditions,
    enrich_pair,
    gen_sharp_pair_case1,
    gen_sharp_pair_case2,
    gen_star_pair_2x2,
    group_inverse,
    random_certified_pair,
    verify_prelimgrp_properties,
    verify_sum_identity_group,
    verify_sum_identity_mp,
)
from ginvsum.core import as_matrix, null_basis
from ginvsum.generators import conjugate_pair

from conftest import assert_close


def test_star_2x2_reference_base():
    pair = gen_star_pair_2x2(1, 0, 1)
    assert_close(pair.A, np.eye(2), atol=0)
    assert_close(pair.B, [[0, 0], [0, -1]], atol=0)
    assert pair.certificate.overall_pass


def test_star_2x2_cancelling_branch():
    pair = gen_star_pair_2x2(-1, 1, 0)
    assert_close(pair.A, [[-1, 1], [-1, 0]], atol=0)
    assert_close(pair.B, [[1, -1], [1, 0]], atol=0)
    assert not (pair.A + pair.B).any()
    assert pair.certificate.overall_pass


def test_star_2x2_constraint():
    with pytest.raises(ConstraintError):
        gen_star_pair_2x2(1, 1, 0)


def test_bordering_printed_layout():
    # the printed M has last column (0, 1, alpha) and last row (0, 2, alpha),
    # i.e. u1 = (0, 1) and v1 = (0, 2) in the [[A, u1], [v1^*, alpha]] layout
    base = gen_star_pair_2x2(1, 0, 1)
    pair = border_star_pair(base.A, base.B, as_matrix([0, 1]), as_matrix([0, 2]), 2)
    assert_close(pair.A, [[1, 0, 0], [0, 1, 1], [0, 2, 2]], atol=0)
    assert_close(pair.B, [[0, 0, 0], [0, -1, -1], [0, -2, -2]], atol=0)
    assert pair.certificate.overall_pass


def test_bordering_with_named_vectors():
    # u1 = (0, 2), v1 = (0, 1) as named in the text gives the transposed layout
    base = gen_star_pair_2x2(1, 0, 1)
    pair = border_star_pair(base.A, base.B, as_matrix([0, 2]), as_matrix([0, 1]), 2)
    assert_close(pair.A, [[1, 0, 0], [0, 1, 2], [0, 1, 2]], atol=0)
    assert_close(pair.B, [[0, 0, 0], [0, -1, -2], [0, -1, -2]], atol=0)
    assert pair.certificate.overall_pass
    assert verify_sum_identity_mp(pair.A, pair.B).overall_pass


def test_bordering_with_zero_vectors_is_padding():
    base = gen_star_pair_2x2(1, 0, 1)
    pair = border_star_pair(base.A, base.B, np.zeros((2, 1)), np.zeros((2, 1)), 0)
    assert_close(pair.A, np.diag([1, 1, 0]), atol=0)
    assert_close(pair.B, np.diag([0, -1, 0]), atol=0)


def test_iterated_bordering(rng):
    pair = gen_star_pair_2x2(1.5, 0, -0.5j)
    for _ in range(3):
        S = pair.A + pair.B
        u1 = null_basis(S.conj().T) @ rng.standard_normal((S.shape[0] - 1, 1))
        v1 = null_basis(S) @ rng.standard_normal((S.shape[1] - 1, 1))
        before = S
        pair = border_star_pair(pair.A, pair.B, u1, v1, 0.3 - 0.4j)
        assert check_star_conditions(pair.A, pair.B).overall_pass
        grown = np.zeros((before.shape[0] + 1,) * 2, dtype=complex)
        grown[:-1, :-1] = before
        assert np.array_equal(pair.A + pair.B, grown)
    assert pair.A.shape == (5, 5)


def test_bordering_rejects_bad_vectors():
    base = gen_star_pair_2x2(1, 0, 1)  # A + B = diag(1, 0)
    with pytest.raises(PreconditionError, match=r"\(A\+B\)\^\* u1"):
        border_star_pair(base.A, base.B, as_matrix([1, 0]), as_matrix([0, 1]), 1)
    with pytest.raises(PreconditionError, match=r"\(A\+B\) v1"):
        border_star_pair(base.A, base.B, as_matrix([0, 1]), as_matrix([1, 0]), 1)


def test_bordering_uses_adjoint_for_u1():
    # non-normal A + B: N(A+B) and N((A+B)^*) differ, and only u1 in N((A+B)^*) is valid
    pair = enrich_pair(gen_star_pair_2x2(1, 0, 1), "star", seed=5)
    S = pair.A + pair.B
    wrong = null_basis(S)
    assert np.linalg.norm(S.conj().T @ wrong) > 1e-3
    with pytest.raises(PreconditionError):
        border_star_pair(pair.A, pair.B, wrong, null_basis(S), 1)
    assert border_star_pair(pair.A, pair.B, null_basis(S.conj().T), null_basis(S), 1).certificate.overall_pass


def test_bordering_requires_star_pair():
    with pytest.raises(PreconditionError):
        border_star_pair(np.eye(2), np.eye(2), np.zeros((2, 1)), np.zeros((2, 1)), 0)


def test_sharp_case1():
    pair = gen_sharp_pair_case1(1, 0)
    assert_close(pair.A, -np.eye(2), atol=0)
    assert_close(pair.B, [[1, 1], [0, 0]], atol=0)
    report = verify_sum_identity_group(pair.A, pair.B)
    assert report.overall_pass
    assert_close(group_inverse(pair.A + pair.B), [[0, 1], [0, -1]])


def test_sharp_case1_trivial_sum():
    pair = gen_sharp_pair_case1(1, -1)
    assert not (pair.A + pair.B).any()
    assert pair.certificate.overall_pass
    assert verify_sum_identity_group(pair.A, pair.B).overall_pass


def test_sharp_case1_constraint():
    with pytest.raises(ConstraintError):
        gen_sharp_pair_case1(0, 1)


def test_sharp_case2():
    pair = gen_sharp_pair_case2(1, 1)
    assert_close(pair.A, np.diag([1, -1]), atol=0)
    assert_close(pair.B, np.diag([0, 1]), atol=0)
    assert_close(group_inverse(pair.A + pair.B), np.diag([1, 0]))
    assert verify_sum_identity_group(pair.A, pair.B).overall_pass
    pair = gen_sharp_pair_case2(2, -1)
    assert_close(pair.A, np.diag([2, 1]), atol=0)
    assert_close(pair.B, np.diag([0, -1]), atol=0)
    assert pair.certificate.overall_pass


@pytest.mark.parametrize("a, beta3", [(1, -1), (0, 1), (1, 0)])
def test_sharp_case2_constraints(a, beta3):
    with pytest.raises(ConstraintError):
        gen_sharp_pair_case2(a, beta3)


def test_printed_case2_pair_violates_its_constraints():
    # the non-diagonal case-2 matrices with beta1 != 0 fail the sharp hypothesis
    report = check_sharp_conditions(as_matrix([[1, -1], [0, -1]]), as_matrix([[0, 1], [0, 1]]))
    assert not report.overall_pass


def test_conjugation_by_identity_is_a_no_op():
    base = gen_star_pair_2x2(1, 0, 1)
    same = conjugate_pair(base, "star", np.eye(2), np.eye(2))
    assert np.array_equal(same.A, base.A) and np.array_equal(same.B, base.B)


def test_enrich_star():
    pair = enrich_pair(gen_star_pair_2x2(1, 0, 1), "star", seed=11)
    assert np.count_nonzero(np.abs(pair.A) > 1e-3) == 4
    assert max(item.residual for item in pair.certificate.items) <= 1e-12


def test_enrich_sharp():
    pair = enrich_pair(gen_sharp_pair_case2(1, 1), "sharp", seed=11)
    assert np.count_nonzero(np.abs(pair.A) > 1e-3) == 4
    assert max(item.relative for item in pair.certificate.items) <= 1e-8


def test_random_pairs_examples():
    pair = random_certified_pair("star", 2, 123)
    assert pair.A.shape == (2, 2) and pair.certificate.overall_pass
    pair = random_certified_pair("star", 5, 42)
    assert pair.A.shape == (5, 5)
    assert verify_sum_identity_mp(pair.A, pair.B).overall_pass
    pair = random_certified_pair("sharp", 6, 7)
    assert pair.A.shape == (6, 6)
    assert verify_sum_identity_group(pair.A, pair.B).overall_pass


def test_random_pair_rejects_small_order():
    with pytest.raises(ValueError):
        random_certified_pair("star", 1, 0)


@pytest.mark.parametrize("kind", ["star", "sharp"])
def test_determinism(kind):
    p, q = random_certified_pair(kind, 6, 99), random_certified_pair(kind, 6, 99)
    assert p.A.tobytes() == q.A.tobytes() and p.B.tobytes() == q.B.tobytes()
    assert p.recipe.seed == 99
    r = random_certified_pair(kind, 6, 100)
    assert not np.array_equal(p.A, r.A)


@pytest.mark.parametrize("kind", ["star", "sharp"])
def test_certificate_reproducible(kind):
    check = check_star_conditions if kind == "star" else check_sharp_conditions
    for seed in range(30):
        pair = random_certified_pair(kind, 2 + seed % 7, seed)
        again = check(pair.A, pair.B)
        for old, new in zip(pair.certificate.items, again.items):
            assert abs(old.residual - new.residual) <= 1e-12


def test_star_pipeline_soundness():
    for seed in range(200):
        pair = random_certified_pair("star", 2 + seed % 7, seed)
        assert pair.certificate.overall_pass
        assert verify_sum_identity_mp(pair.A, pair.B).items[0].relative <= 1e-8


def test_sharp_pipeline_soundness():
    for seed in range(200):
        pair = random_certified_pair("sharp", 2 + seed % 7, seed)
        assert pair.certificate.overall_pass
        assert verify_sum_identity_group(pair.A, pair.B).overall_pass
        assert verify_prelimgrp_properties(pair.A, pair.B).overall_pass
