import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from isosym.errors import DimensionMismatch
from isosym.linalg import (adjoint, as_matrix, eigenpairs, fro_norm, kron,
                           matmul, matrix_rank, null_space)


def _random(dim, seed, rect=None):
    rng = np.random.default_rng(seed)
    shape = (dim, rect or dim)
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def _reference_r1():
    r1 = np.zeros((3, 3), dtype=complex)
    r1[1, 0] = 1.0
    return r1


def test_adjoint_examples():
    assert np.array_equal(adjoint(np.array([[1j]])), np.array([[-1j]]))
    assert np.array_equal(adjoint(np.eye(3)), np.eye(3))
    expect = np.zeros((3, 3))
    expect[0, 1] = 1.0
    assert np.array_equal(adjoint(_reference_r1()), expect)


@given(st.integers(0, 10 ** 6), st.integers(1, 6), st.integers(1, 6))
@settings(max_examples=40)
def test_adjoint_involution_bit_exact(seed, rows, cols):
    m = _random(rows, seed, rect=cols)
    assert np.array_equal(adjoint(adjoint(m)), m)


def test_matmul_identity_and_nilpotent():
    m = _random(2, 3)
    assert np.allclose(matmul(np.eye(2), m), m)
    n = np.array([[0.0, 1.0], [0.0, 0.0]])
    assert np.array_equal(matmul(n, n), np.zeros((2, 2)))


def test_matmul_reference_gram():
    r1 = _reference_r1()
    assert np.array_equal(matmul(adjoint(r1), r1), np.diag([1.0, 0.0, 0.0]))


def test_matmul_shape_check():
    with pytest.raises(DimensionMismatch):
        matmul(np.eye(2), np.eye(3))


def test_kron_shape_and_scalar():
    a = _random(3, 1)
    assert kron(np.eye(2), a).shape == (6, 6)
    b = _random(4, 2)
    assert np.allclose(kron(np.array([[2.0]]), b), 2.0 * b)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=25)
def test_kron_mixed_product(seed):
    rng = np.random.default_rng(seed)
    a, b, c, d = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
                  for _ in range(4))
    lhs = kron(a, b) @ kron(c, d)
    rhs = kron(a @ c, b @ d)
    assert np.linalg.norm(lhs - rhs) <= 1e-12 * (1 + np.linalg.norm(rhs))


def test_fro_norm_values():
    assert fro_norm(np.zeros((3, 3))) == 0.0
    assert fro_norm(np.eye(3)) == pytest.approx(np.sqrt(3))
    assert fro_norm(np.diag([1.0, 0.0, 0.0])) == 1.0


@given(st.integers(0, 10 ** 6), st.integers(2, 8))
@settings(max_examples=25)
def test_fro_norm_unitary_invariance(seed, dim):
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    u, _ = np.linalg.qr(g)
    m = _random(dim, seed + 1)
    assert abs(fro_norm(u @ m) - fro_norm(m)) <= 1e-12 * (1 + fro_norm(m))


def test_eigenpairs_diagonal():
    pairs = eigenpairs(np.diag([1.0, 2.0, 3.0]))
    assert sorted(round(p[0].real) for p in pairs) == [1, 2, 3]


def test_eigenpairs_jordan_block_multiplicity():
    pairs = eigenpairs(np.array([[1.0, 1.0], [0.0, 1.0]]))
    assert len(pairs) == 2
    assert all(abs(lam - 1.0) < 1e-6 for lam, _ in pairs)
    # geometric multiplicity 1: the two vectors are essentially parallel
    v0, v1 = pairs[0][1], pairs[1][1]
    assert abs(abs(np.vdot(v0, v1)) - 1.0) < 1e-6


def test_eigenpairs_nilpotent():
    pairs = eigenpairs(_reference_r1())
    assert all(abs(lam) < 1e-7 for lam, _ in pairs)
    assert len(pairs) == 3


def test_eigenpairs_residual_contract():
    m = _random(16, 5)
    scale = 1e-9 * (1 + fro_norm(m))
    for lam, v in eigenpairs(m):
        assert np.linalg.norm(m @ v - lam * v) <= scale


def test_null_space_cases():
    assert len(null_space(np.zeros((4, 4)))) == 4
    assert null_space(np.eye(4)) == []
    basis = null_space(_reference_r1())
    assert len(basis) == 2
    # spans e2, e3: every basis vector has zero first coordinate
    for v in basis:
        assert abs(v[0]) < 1e-12
    gram = np.array([[np.vdot(a, b) for b in basis] for a in basis])
    assert np.linalg.norm(gram - np.eye(2)) < 1e-10


def test_matrix_rank_cases():
    eye = np.eye(2)
    assert matrix_rank([eye, 2 * eye]) == 1
    assert matrix_rank([eye, np.diag([1.0, 0.0])]) == 2
    assert matrix_rank([np.zeros((2, 2))]) == 0
    assert matrix_rank([]) == 0


@given(st.integers(0, 10 ** 6), st.floats(0.1, 100.0))
@settings(max_examples=25)
def test_matrix_rank_scale_invariance(seed, scale):
    mats = [_random(3, seed + i) for i in range(3)]
    assert matrix_rank(mats) == matrix_rank([scale * m for m in mats])


def test_as_matrix_rejects_nonfinite():
    with pytest.raises(ValueError):
        as_matrix([[np.nan, 0.0], [0.0, 1.0]])
    with pytest.raises(DimensionMismatch):
        as_matrix([1.0, 2.0])
