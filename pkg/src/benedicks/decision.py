"""Benedicks-type uncertainty verdicts for metaplectic Wigner distributions.

Given a symplectic matrix ``a`` of side ``4d`` the rotation factor ``U`` of
its pre-Iwasawa decomposition decides everything:

* sesquilinear case ``W_a(f, g)`` -- the uncertainty principle holds iff
  ``U^T U`` is *not* block-diagonal with ``d x d`` blocks;
* quadratic case ``W_a(f, f)`` -- it holds iff ``U^T U`` is not of the form
  ``diag(M, conj(M))``.

When the principle fails, :func:`witness_recipe` returns the matrices that
build compactly supported counterexamples.
"""

from dataclasses import dataclass

import numpy as np

from .decompositions import (
    BLOCK_TOL,
    block_factorize_unitary,
    conj_mismatch,
    conjugate_pair_factorize,
    off_block_norm,
    pre_iwasawa,
)
from .errors import BadParam, HalfDimOdd, VerdictHolds
from .symplectic import (
    _rng,
    block_diag2,
    gen_dl,
    gen_ru,
    gen_vq,
    half_dim,
    random_invertible,
    random_symmetric,
)

KINDS = ("sesquilinear", "quadratic")
BORDERLINE_FACTOR = 10.0


@dataclass(frozen=True)
class Verdict:
    """Outcome of the decision procedure together with its numeric margins.

    ``borderline`` is set when a margin that decides the outcome lies within a
    factor of ten of ``tolerance``.
    """

    kind: str
    holds: bool
    deciding_product: np.ndarray
    off_block_norm: float
    conj_mismatch: float
    tolerance: float
    borderline: bool

    def to_json(self):
        m = self.deciding_product
        return {
            "kind": self.kind,
            "holds": bool(self.holds),
            "off_block_norm": float(self.off_block_norm),
            "conj_mismatch": float(self.conj_mismatch),
            "tolerance": float(self.tolerance),
            "borderline": bool(self.borderline),
            "deciding_product": {"re": m.real.tolist(), "im": m.imag.tolist()},
        }

    @classmethod
    def from_json(cls, obj):
        dp = obj["deciding_product"]
        m = np.array(dp["re"], dtype=float) + 1j * np.array(dp["im"], dtype=float)
        return cls(
            kind=obj["kind"],
            holds=bool(obj["holds"]),
            deciding_product=m,
            off_block_norm=float(obj["off_block_norm"]),
            conj_mismatch=float(obj["conj_mismatch"]),
            tolerance=float(obj["tolerance"]),
            borderline=bool(obj["borderline"]),
        )


@dataclass(frozen=True)
class WitnessRecipe:
    """Data ``(q, l, w, delta1, delta2)`` with ``a = V_q D_l R_{w diag(delta1, delta2)}``.

    ``w`` is real orthogonal, so ``R_{w diag(...)} = D_w R_{diag(...)}``.
    """

    q: np.ndarray
    l: np.ndarray
    w: np.ndarray
    delta1: np.ndarray
    delta2: np.ndarray
    mode: str

    @property
    def d(self):
        return self.delta1.shape[0]

    def rotation(self):
        return self.w @ block_diag2(self.delta1, self.delta2)

    def matrix(self):
        return gen_vq(self.q) @ gen_dl(self.l) @ gen_dl(self.w) @ gen_ru(
            block_diag2(self.delta1, self.delta2)
        )


def _split_dim(a):
    n = half_dim(np.asarray(a))
    if n % 2:
        raise HalfDimOdd(f"half dimension {n} has no d x d block split")
    return n // 2


def deciding_product(a):
    """``U^T U`` for the rotation factor ``U`` of the pre-Iwasawa decomposition."""
    u = pre_iwasawa(a).u
    m = u.T @ u
    return 0.5 * (m + m.T)


def _check_tol(tol):
    if not (tol > 0 and np.isfinite(tol)):
        raise BadParam("tol must be a positive finite number")


def _near(x, tol):
    return tol / BORDERLINE_FACTOR <= x <= tol * BORDERLINE_FACTOR


def decide_sesquilinear(a, tol=BLOCK_TOL):
    """Decide the sesquilinear Benedicks principle for ``W_a(f, g)``.

    Parameters
    ----------
    a : ndarray, shape (4d, 4d)
        Symplectic matrix.
    tol : float
        Relative cut for block-diagonality of ``U^T U``.

    Returns
    -------
    Verdict
        ``holds`` is true iff the relative off-block norm exceeds ``tol``.
    """
    _check_tol(tol)
    d = _split_dim(a)
    m = deciding_product(a)
    ob = off_block_norm(m, d)
    cm = conj_mismatch(m, d)
    return Verdict("sesquilinear", ob > tol, m, ob, cm, float(tol), _near(ob, tol))


def decide_quadratic(a, tol=BLOCK_TOL):
    """Decide the quadratic Benedicks principle for ``W_a(f, f)``.

    The principle fails iff ``U^T U`` is block-diagonal and its lower block
    is the complex conjugate of the upper one, both within ``tol``.
    """
    _check_tol(tol)
    d = _split_dim(a)
    m = deciding_product(a)
    ob = off_block_norm(m, d)
    cm = conj_mismatch(m, d)
    holds = ob > tol or cm > tol
    if ob > tol:
        borderline = _near(ob, tol)
    elif cm > tol:
        borderline = _near(cm, tol)
    else:
        borderline = _near(ob, tol) or _near(cm, tol)
    return Verdict("quadratic", holds, m, ob, cm, float(tol), borderline)


def decide(a, kind="sesquilinear", tol=BLOCK_TOL):
    if kind == "sesquilinear":
        return decide_sesquilinear(a, tol)
    if kind == "quadratic":
        return decide_quadratic(a, tol)
    raise BadParam(f"unknown kind {kind!r}")


def witness_recipe(a, mode="sesquilinear", tol=BLOCK_TOL):
    """Factor data for counterexamples when the principle fails.

    Raises
    ------
    VerdictHolds
        If the principle holds, in which case no counterexample exists.
    """
    verdict = decide(a, mode, tol)
    if verdict.holds:
        raise VerdictHolds(f"{mode} uncertainty principle holds; no witness exists")
    pi = pre_iwasawa(a)
    if mode == "sesquilinear":
        bf = block_factorize_unitary(pi.u, tol)
        return WitnessRecipe(pi.q, pi.l, bf.w, bf.delta1, bf.delta2, mode)
    cp = conjugate_pair_factorize(pi.u, tol)
    return WitnessRecipe(pi.q, pi.l, cp.w, cp.delta1, cp.delta2, mode)


def verdict_invariance_check(a, seed=0, draws=8, tol=BLOCK_TOL):
    """Check the reduction invariances of the sesquilinear verdict on ``a``.

    Left multiplication by ``V_Q D_L`` must leave the verdict and the
    off-block norm unchanged (within ``1e-8``), and right multiplication by
    ``R_{tau I}`` must leave the off-block norm unchanged (within ``1e-12``).
    """
    a = np.asarray(a, dtype=float)
    n = half_dim(a)
    rng = _rng(seed)
    base = decide_sesquilinear(a, tol)
    for _ in range(draws):
        q = random_symmetric(n, rng)
        l = random_invertible(n, rng)
        other = decide_sesquilinear(gen_vq(q) @ gen_dl(l) @ a, tol)
        if other.holds != base.holds or abs(other.off_block_norm - base.off_block_norm) > 1e-8:
            return False
    for theta in rng.uniform(0.0, 2 * np.pi, size=draws):
        rotated = a @ gen_ru(np.exp(1j * theta) * np.eye(n))
        if abs(off_block_norm(deciding_product(rotated)) - base.off_block_norm) > 1e-12:
            return False
    return True
