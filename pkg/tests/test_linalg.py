import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from benedicks.errors import NotSPD, NotSymmetric
from benedicks.linalg import (
    eig_clusters,
    is_orthogonal,
    is_symmetric,
    is_unitary,
    min_singular_value,
    spd_sqrt,
    svd_real,
    sym_eig,
)

seeds = st.integers(0, 2**32 - 1)
sizes = st.integers(1, 8)


def _sym(n, seed):
    g = np.random.Generator(np.random.Philox(seed)).standard_normal((n, n))
    return g + g.T


@given(sizes, seeds)
def test_sym_eig_reconstructs(n, seed):
    m = _sym(n, seed)
    lam, v = sym_eig(m)
    assert np.all(np.diff(lam) <= 0)
    assert np.allclose(v.T @ v, np.eye(n), atol=1e-12)
    assert np.allclose((v * lam) @ v.T, m, atol=1e-10)


def test_sym_eig_is_deterministic_on_repeated_eigenvalues():
    q, _ = np.linalg.qr(np.random.Generator(np.random.Philox(3)).standard_normal((4, 4)))
    m = q @ np.diag([2.0, 2.0, 1.0, 1.0]) @ q.T
    lam1, v1 = sym_eig(m)
    lam2, v2 = sym_eig(m.copy())
    assert np.array_equal(lam1, lam2) and np.array_equal(v1, v2)
    assert np.allclose((v1 * lam1) @ v1.T, m, atol=1e-12)


def test_sym_eig_sign_convention():
    _, v = sym_eig(np.diag([3.0, -1.0]))
    assert np.allclose(v, np.eye(2))


def test_sym_eig_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        sym_eig(np.array([[1.0, 2.0], [0.0, 1.0]]))


@given(sizes, seeds)
def test_spd_sqrt_squares_back(n, seed):
    g = np.random.Generator(np.random.Philox(seed)).standard_normal((n, n))
    s = g @ g.T + 0.1 * np.eye(n)
    r = spd_sqrt(s)
    assert np.allclose(r, r.T)
    assert np.all(np.linalg.eigvalsh(r) > 0)
    assert np.allclose(r @ r, s, atol=1e-9 * np.linalg.norm(s))


def test_spd_sqrt_rejects_indefinite():
    with pytest.raises(NotSPD):
        spd_sqrt(np.diag([1.0, -1.0]))


def test_spd_sqrt_known_value():
    assert np.allclose(spd_sqrt(2 * np.eye(3)), np.sqrt(2) * np.eye(3), atol=1e-15)


def test_svd_real_zero_matrix():
    u, s, v = svd_real(np.zeros((3, 3)))
    assert np.array_equal(u, np.eye(3)) and np.array_equal(v, np.eye(3))
    assert not np.any(s)


@given(sizes, seeds)
def test_svd_real_reconstructs(n, seed):
    m = np.random.Generator(np.random.Philox(seed)).standard_normal((n, n))
    u, s, v = svd_real(m)
    assert np.allclose((u * s) @ v.T, m, atol=1e-12)
    assert np.isclose(min_singular_value(m), s.min())


def test_eig_clusters():
    cl = eig_clusters(np.array([3.0, 3.0 + 1e-12, 1.0, 0.5, 0.5]), 1e-9)
    assert [(c.start, c.stop) for c in cl] == [(0, 2), (2, 3), (3, 5)]


def test_predicates():
    assert is_symmetric(np.eye(2))
    assert is_unitary(np.diag([1j, -1]))
    assert is_orthogonal(np.array([[0.0, 1.0], [-1.0, 0.0]]))
    assert not is_orthogonal(np.diag([1j, 1]))
