"""Reduced-size property suites run by ``benedicks selfcheck``.

Each suite returns ``(passed, detail)``.  The suites are small versions of
the acceptance tests so that a build can be sanity-checked in seconds.
"""

import numpy as np

from . import grid
from .decision import (
    decide_quadratic,
    decide_sesquilinear,
    deciding_product,
    verdict_invariance_check,
    witness_recipe,
)
from .decompositions import exceptional_taus, joint_svd, pre_iwasawa, tau_rotate
from .symplectic import (
    _rng,
    catalog,
    gen_ru,
    gen_vq,
    random_symplectic,
    random_unitary,
    standard_j,
)


def _catalog_reproduction(seed):
    pi = pre_iwasawa(catalog("stft"))
    u_ref = np.array([[1, -1], [1j, 1j]]) / np.sqrt(2)
    q_ref = -0.5 * np.array([[0, 1], [1, 0]])
    err = max(
        np.abs(pi.q - q_ref).max(),
        np.abs(pi.l - np.sqrt(2) * np.eye(2)).max(),
        np.abs(pi.u - u_ref).max(),
        np.abs(deciding_product(catalog("stft")) + np.array([[0, 1], [1, 0]])).max(),
    )
    return err < 1e-12, f"max error {err:.2e}"


def _verdict_table(seed):
    holds = [catalog("stft"), catalog("ambiguity"), catalog("tau_wigner", tau=0.5)]
    fails = [catalog("fourier"), catalog("chirp"), catalog("dilation"), catalog("tau_wigner", tau=0.0)]
    ok = all(decide_sesquilinear(a).holds for a in holds)
    ok &= not any(decide_sesquilinear(a).holds for a in fails)
    ok &= decide_quadratic(catalog("tau_wigner", tau=1.0)).holds
    th = 0.4
    ok &= not decide_quadratic(gen_ru(np.diag([np.exp(1j * th), np.exp(-1j * th)]))).holds
    return bool(ok), "catalog verdicts"


def _decompositions(seed):
    worst = 0.0
    for k in range(20):
        n = (1, 2, 4)[k % 3]
        a = random_symplectic(n, seed=seed * 1000 + k)
        worst = max(worst, np.linalg.norm(pre_iwasawa(a).reconstruct() - a))
        if n % 2 == 0 and not verdict_invariance_check(a, seed + k):
            return False, f"invariance failed on draw {k}"
    return worst < 1e-9, f"max residual {worst:.2e}"


def _joint_svd(seed):
    rng = _rng(seed)
    worst = 0.0
    for _ in range(50):
        u = random_unitary(int(rng.integers(2, 9)), rng)
        sv = joint_svd(u)
        worst = max(worst, np.linalg.norm(sv.reconstruct() - u))
        if len(exceptional_taus(u)) > 2 * u.shape[0] or tau_rotate(u).margin <= 0:
            return False, "tau rotation failed"
    return worst < 1e-10, f"max residual {worst:.2e}"


def _fourier_convention(seed):
    # a shifted Gaussian picks up the phase exp(-2 pi i x0 w)
    spec = grid.GridSpec.critical(1, 128)
    x0 = 0.75
    w = spec.axis()
    out = grid.apply_fourier(grid.sample("gauss", spec, center=x0))
    ref = 2 ** 0.25 * np.exp(-np.pi * w * w) * np.exp(-2j * np.pi * x0 * w)
    err = grid.rel_l2(out.samples, ref)
    return err < 1e-6, f"relative error {err:.2e}"


def _stft_gaussian(seed):
    spec = grid.GridSpec.critical(1, 128)
    g = grid.sample("gauss", spec)
    x = spec.axis()
    ref = np.exp(-np.pi * (x[:, None] ** 2 + x[None, :] ** 2) / 2)
    err = grid.rel_l2(np.abs(grid.wigner(catalog("stft"), g, g).samples), ref)
    return err < 1e-3, f"relative error {err:.2e}"


def _free_reduction(seed):
    # W_A for A = J V_P versus a short-time Fourier transform of chirped inputs
    spec = grid.GridSpec.critical(1, 128)
    p = np.array([[0.5, 0.8], [0.8, -0.3]])
    gam = p[0, 1]
    f = grid.sample("gauss", spec, center=0.4)
    g = grid.sample("hermite", spec, k=1)
    w = grid.wigner(standard_j(2) @ gen_vq(p), f, g)
    lhs = grid.apply_dilation(w.abs(), np.diag([1 / gam, 1.0])).samples / np.sqrt(abs(gam))
    f1 = grid.apply_chirp(f, [[p[0, 0]]])
    g1 = grid.apply_chirp(g, [[-p[1, 1]]])
    f2 = grid.GridFunction(spec, grid.apply_dilation(f1, [[gam]]).samples * np.sqrt(abs(gam)))
    rhs = np.abs(grid.stft(f2, grid.apply_fourier(g1)).samples).T / abs(gam)
    err = grid.rel_l2(np.abs(lhs), rhs)
    return err < 1e-2, f"relative error {err:.2e}"


def _frac_ft(seed):
    spec = grid.GridSpec.critical(1, 128)
    rng = _rng(seed)
    f = grid.sample("gauss", spec, center=float(rng.uniform(-0.5, 0.5)))
    a, b = np.exp(1j * rng.uniform(0, 2 * np.pi, size=2))
    lhs = np.abs(grid.apply_frac_ft(grid.apply_frac_ft(f, [a]), [b]).samples)
    rhs = np.abs(grid.apply_frac_ft(f, [a * b]).samples)
    err = grid.rel_l2(lhs, rhs)
    return err < 1e-3, f"semigroup error {err:.2e}"


def _witness(seed):
    areas = []
    for n in (128, 256):
        spec = grid.GridSpec.critical(1, n)
        r = grid.sample("rect", spec)
        a = catalog("tau_wigner", tau=0.0)
        _, _, w = grid.witness_build(witness_recipe(a), r, r, a=a)
        areas.append(grid.support_report(w, 1e-3).area)
    change = abs(areas[1] - areas[0]) / areas[0]
    return change < 0.1, f"areas {areas[0]:.3f} -> {areas[1]:.3f}"


def _partial_stft(seed):
    spec = grid.GridSpec.critical(2, 16)
    rng = _rng(seed)
    f = grid.GridFunction(spec, rng.standard_normal(spec.shape) + 1j * rng.standard_normal(spec.shape))
    g = grid.sample("gauss", spec)
    err = np.abs(grid.partial_stft(f, g, 2).samples - grid.stft(f, g).samples).max()
    return err == 0.0, f"max difference {err:.2e}"


SUITES = (
    ("catalog_reproduction", _catalog_reproduction),
    ("verdict_table", _verdict_table),
    ("decompositions", _decompositions),
    ("joint_svd_tau", _joint_svd),
    ("fourier_convention", _fourier_convention),
    ("stft_gaussian", _stft_gaussian),
    ("free_reduction", _free_reduction),
    ("frac_ft_semigroup", _frac_ft),
    ("witness_support", _witness),
    ("partial_stft", _partial_stft),
)


def run_all(seed=0):
    """Run every suite; returns a list of ``(name, passed, detail)``."""
    results = []
    for name, suite in SUITES:
        try:
            ok, detail = suite(seed)
        except Exception as exc:  # a crash is a failure of that suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, bool(ok), detail))
    return results


def format_table(results):
    width = max(len(name) for name, _, _ in results)
    lines = [f"{'suite'.ljust(width)}  result  detail"]
    for name, ok, detail in results:
        lines.append(f"{name.ljust(width)}  {'PASS' if ok else 'FAIL'}    {detail}")
    return "\n".join(lines)
