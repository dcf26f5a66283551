import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from benedicks.errors import BadParam, NotSymmetric, NotUnitary, OddDimension, Singular, UnknownName
from benedicks.symplectic import (
    CATALOG_NAMES,
    _rng,
    catalog,
    embed_pair,
    from_json,
    gen_dl,
    gen_ru,
    gen_vq,
    is_symplectic,
    random_invertible,
    random_symmetric,
    random_symplectic,
    random_unitary,
    standard_j,
    symplectic_inverse,
    to_json,
)

seeds = st.integers(0, 2**32 - 1)
half = st.sampled_from([1, 2, 3, 4])


def test_standard_j():
    j = standard_j(2)
    assert np.array_equal(j @ j, -np.eye(4))
    assert is_symplectic(j)[0]


@given(half, seeds)
def test_generators_are_symplectic(n, seed):
    rng = _rng(seed)
    for m in (gen_vq(random_symmetric(n, rng)), gen_dl(random_invertible(n, rng)), gen_ru(random_unitary(n, rng))):
        ok, res = is_symplectic(m)
        assert ok, res


@given(half, seeds)
def test_generator_homomorphisms(n, seed):
    rng = _rng(seed)
    q1, q2 = random_symmetric(n, rng), random_symmetric(n, rng)
    l1, l2 = random_invertible(n, rng), random_invertible(n, rng)
    u1, u2 = random_unitary(n, rng), random_unitary(n, rng)
    assert np.allclose(gen_vq(q1) @ gen_vq(q2), gen_vq(q1 + q2))
    assert np.allclose(gen_dl(l1) @ gen_dl(l2), gen_dl(l1 @ l2))
    assert np.allclose(gen_ru(u1) @ gen_ru(u2), gen_ru(u1 @ u2))


@given(half, seeds)
def test_dilation_conjugates_chirp(n, seed):
    # D_L V_Q D_L^-1 = V_{L^-T Q L^-1}
    rng = _rng(seed)
    q, l = random_symmetric(n, rng), random_invertible(n, rng)
    li = np.linalg.inv(l)
    assert np.allclose(gen_dl(l) @ gen_vq(q) @ gen_dl(li), gen_vq(li.T @ q @ li))


def test_fourier_is_rotation_by_i():
    for n in (1, 3):
        assert np.array_equal(gen_ru(1j * np.eye(n)), standard_j(n))


@given(half, seeds)
def test_symplectic_inverse(n, seed):
    a = random_symplectic(n, seed)
    assert np.allclose(symplectic_inverse(a) @ a, np.eye(2 * n), atol=1e-10)


@given(st.sampled_from([1, 2]), seeds)
def test_embedding_is_homomorphism(n, seed):
    rng = _rng(seed)
    a1, a2 = random_symplectic(n, seed), random_symplectic(n, seed + 1)
    b1, b2 = random_symplectic(n, seed + 2), random_symplectic(n, seed + 3)
    e = embed_pair(a1, a2)
    assert is_symplectic(e, 1e-8)[0]
    assert np.allclose(embed_pair(a1, a2) @ embed_pair(b1, b2), embed_pair(a1 @ b1, a2 @ b2))
    u1, u2 = random_unitary(n, rng), random_unitary(n, rng)
    big = np.zeros((2 * n, 2 * n), complex)
    big[:n, :n], big[n:, n:] = u1, u2
    assert np.allclose(embed_pair(gen_ru(u1), gen_ru(u2)), gen_ru(big))


@pytest.mark.parametrize("name", CATALOG_NAMES)
@pytest.mark.parametrize("d", [1, 2])
def test_catalog_is_symplectic(name, d):
    a = catalog(name, d=d, tau=0.3)
    assert a.shape == (4 * d, 4 * d)
    ok, res = is_symplectic(a)
    assert ok and res < 1e-14


def test_catalog_stft_entries():
    expected = np.array([[1, -1, 0, 0], [0, 0, 1, 1], [0, 0, 0, -1], [-1, 0, 0, 0]], float)
    assert np.array_equal(catalog("stft"), expected)


def test_catalog_errors():
    with pytest.raises(UnknownName):
        catalog("wavelet")
    with pytest.raises(BadParam):
        catalog("tau_wigner")
    with pytest.raises(BadParam):
        catalog("stft", d=0)
    with pytest.raises(BadParam):
        catalog("dilation", l=np.zeros((2, 2)))


def test_generator_errors():
    with pytest.raises(NotSymmetric):
        gen_vq(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(Singular):
        gen_dl(np.zeros((2, 2)))
    with pytest.raises(NotUnitary):
        gen_ru(2 * np.eye(2))
    with pytest.raises(OddDimension):
        is_symplectic(np.eye(3))


def test_random_symplectic_is_reproducible():
    assert np.array_equal(random_symplectic(3, 11), random_symplectic(3, 11))
    assert not np.array_equal(random_symplectic(3, 11), random_symplectic(3, 12))


def test_json_round_trip():
    a = catalog("tau_wigner", d=2, tau=0.25)
    obj = json.loads(json.dumps(to_json(a)))
    assert np.array_equal(from_json(obj), a)
    with pytest.raises(BadParam):
        from_json({"half_dim": 3, "entries": a.tolist()})
    with pytest.raises(BadParam):
        from_json({"entries": []})
