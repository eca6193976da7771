import numpy as np
import pytest
from hypothesis import given

from ginvsum import frobenius_norm, full_rank_factorize, inverse_square, numerical_rank
from ginvsum.core import as_matrix

from conftest import low_rank_matrices, random_matrix_battery


def test_zero_matrix_has_empty_factors():
    frf = full_rank_factorize(np.zeros((2, 3)))
    assert frf.rank == 0
    assert frf.F.shape == (2, 0) and frf.G.shape == (0, 3)
    assert not frf.product().any()


def test_identity():
    frf = full_rank_factorize(np.eye(2))
    assert frf.rank == 2
    assert np.allclose(frf.product(), np.eye(2), atol=0)


def test_rank_one_reconstruction():
    A = as_matrix([[1, 1], [0, 0]])
    frf = full_rank_factorize(A)
    assert frf.rank == 1
    assert frobenius_norm(frf.product() - A) <= 1e-12


def _one_sided_inverse_residuals(F, G):
    r = F.shape[1]
    Fh, Gh = F.conj().T, G.conj().T
    F_left = inverse_square(Fh @ F) @ Fh
    G_right = Gh @ inverse_square(G @ Gh)
    return frobenius_norm(F_left @ F - np.eye(r)), frobenius_norm(G @ G_right - np.eye(r))


@pytest.mark.parametrize("chunk", range(5))
def test_random_battery(chunk):
    for A in random_matrix_battery(seed=100 + chunk, count=100):
        frf = full_rank_factorize(A)
        assert frobenius_norm(frf.product() - A) <= 1e-10 * max(1, frobenius_norm(A))
        assert frf.rank == numerical_rank(A)
        if frf.rank:
            assert numerical_rank(frf.F) == numerical_rank(frf.G) == frf.rank
            left, right = _one_sided_inverse_residuals(frf.F, frf.G)
            assert left <= 1e-10 and right <= 1e-10


@given(low_rank_matrices())
def test_factorization_invariants(A):
    frf = full_rank_factorize(A)
    r = frf.rank
    assert frf.F.shape == (A.shape[0], r) and frf.G.shape == (r, A.shape[1])
    assert frobenius_norm(frf.product() - A) <= 1e-10 * max(1, frobenius_norm(A))
