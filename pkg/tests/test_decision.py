import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from benedicks.decision import (
    Verdict,
    decide_quadratic,
    decide_sesquilinear,
    deciding_product,
    verdict_invariance_check,
    witness_recipe,
)
from benedicks.errors import HalfDimOdd, VerdictHolds
from benedicks.symplectic import (
    _rng,
    catalog,
    embed_pair,
    gen_dl,
    gen_ru,
    gen_vq,
    random_invertible,
    random_symmetric,
    random_symplectic,
    random_unitary,
    standard_j,
)

seeds = st.integers(0, 2**32 - 1)


def _rotation_pair(theta):
    return gen_ru(np.diag([np.exp(1j * theta), np.exp(-1j * theta)]))


def test_deciding_product_values():
    assert np.allclose(deciding_product(catalog("stft")), [[0, -1], [-1, 0]], atol=1e-12)
    assert np.allclose(deciding_product(standard_j(2)), -np.eye(2), atol=1e-12)
    tau = 0.3
    a2 = 1 - 2 * tau + 2 * tau**2
    ref = np.array([[1 - 2 * tau, 2 * (1 - tau) * tau], [2 * (1 - tau) * tau, -(1 - 2 * tau)]]) / a2
    assert np.allclose(deciding_product(catalog("tau_wigner", tau=tau)), ref, atol=1e-12)


@given(st.sampled_from([2, 4]), seeds)
def test_deciding_product_is_unitary_and_symmetric(n, seed):
    m = deciding_product(random_symplectic(n, seed))
    assert np.linalg.norm(m - m.T) < 1e-9
    assert np.linalg.norm(m.conj().T @ m - np.eye(n)) < 1e-9


@pytest.mark.parametrize("name,kw,holds", [
    ("stft", {}, True),
    ("ambiguity", {}, True),
    ("fourier", {}, False),
    ("chirp", {}, False),
    ("dilation", {}, False),
    ("tau_wigner", {"tau": 0.0}, False),
    ("tau_wigner", {"tau": 1.0}, False),
    ("tau_wigner", {"tau": 0.25}, True),
    ("tau_wigner", {"tau": 0.5}, True),
    ("tau_wigner", {"tau": 0.75}, True),
])
def test_sesquilinear_table(name, kw, holds):
    assert decide_sesquilinear(catalog(name, **kw)).holds is holds


def test_quadratic_examples():
    assert decide_quadratic(catalog("tau_wigner", tau=0.0)).holds
    assert decide_quadratic(catalog("stft")).holds
    v = decide_quadratic(_rotation_pair(0.4))
    assert not v.holds and v.conj_mismatch < 1e-12


def test_odd_half_dimension():
    with pytest.raises(HalfDimOdd):
        decide_sesquilinear(random_symplectic(3, 0))
    with pytest.raises(HalfDimOdd):
        decide_quadratic(standard_j(1))


@given(st.sampled_from([2, 4]), seeds)
def test_dichotomy_and_monotonicity(n, seed):
    a = random_symplectic(n, seed)
    s, q = decide_sesquilinear(a), decide_quadratic(a)
    assert s.holds == (s.off_block_norm > s.tolerance)
    assert q.holds == (q.off_block_norm > q.tolerance or q.conj_mismatch > q.tolerance)
    assert q.holds or not s.holds


@given(st.sampled_from([1, 2]), seeds)
def test_embedded_pairs_fail(d, seed):
    rng = _rng(seed)
    a1, a2 = gen_ru(random_unitary(d, rng)), gen_ru(random_unitary(d, rng))
    a = gen_vq(random_symmetric(2 * d, rng)) @ gen_dl(random_invertible(2 * d, rng)) @ embed_pair(a1, a2)
    assert not decide_sesquilinear(a).holds


@given(st.sampled_from([2, 4]), seeds)
def test_left_invariance(n, seed):
    rng = _rng(seed)
    a = random_symplectic(n, seed)
    b = gen_vq(random_symmetric(n, rng)) @ gen_dl(random_invertible(n, rng)) @ a
    assert decide_sesquilinear(a).holds == decide_sesquilinear(b).holds
    assert decide_quadratic(a).holds == decide_quadratic(b).holds


@given(st.floats(0, 2 * np.pi), seeds)
def test_tau_invariance_of_off_block_norm(theta, seed):
    a = random_symplectic(4, seed)
    b = a @ gen_ru(np.exp(1j * theta) * np.eye(4))
    assert abs(decide_sesquilinear(a).off_block_norm - decide_sesquilinear(b).off_block_norm) < 1e-12


@pytest.mark.parametrize("a", [catalog("stft"), standard_j(2), random_symplectic(4, 5)], ids=["stft", "J", "random"])
def test_verdict_invariance_check(a):
    assert verdict_invariance_check(a, seed=3)


def test_borderline_flag():
    tol = 1e-8
    eps = 3e-8
    u = np.diag([1, 1j]) @ np.array([[np.sqrt(1 - eps**2), eps], [-eps, np.sqrt(1 - eps**2)]])
    v = decide_sesquilinear(gen_ru(u), tol)
    assert v.borderline and v.holds
    assert not decide_sesquilinear(catalog("stft")).borderline


@pytest.mark.parametrize("name,kw", [("fourier", {}), ("tau_wigner", {"tau": 0.0}), ("chirp", {}), ("dilation", {})])
@pytest.mark.parametrize("d", [1, 2])
def test_witness_recipe_reconstructs(name, kw, d):
    a = catalog(name, d=d, **kw)
    r = witness_recipe(a)
    assert np.linalg.norm(r.matrix() - a) < 1e-8
    assert np.allclose(r.w.T @ r.w, np.eye(2 * d))


def test_witness_recipe_fourier_is_i_factorization():
    r = witness_recipe(standard_j(2))
    assert np.allclose(r.rotation(), 1j * np.eye(2))


def test_witness_recipe_quadratic():
    a = _rotation_pair(0.4)
    r = witness_recipe(a, "quadratic")
    assert np.allclose(r.delta2, r.delta1.conj())
    assert np.linalg.norm(r.matrix() - a) < 1e-8


def test_witness_recipe_raises_when_principle_holds():
    with pytest.raises(VerdictHolds):
        witness_recipe(catalog("stft"))
    with pytest.raises(VerdictHolds):
        witness_recipe(catalog("tau_wigner", tau=0.0), "quadratic")


def test_verdict_json_round_trip():
    v = decide_quadratic(catalog("tau_wigner", tau=0.2))
    obj = json.loads(json.dumps(v.to_json()))
    assert set(obj) == {"kind", "holds", "off_block_norm", "conj_mismatch", "tolerance", "borderline", "deciding_product"}
    back = Verdict.from_json(obj)
    assert back.to_json() == obj
    assert np.array_equal(back.deciding_product, v.deciding_product)
