"""Factorizations of symplectic and unitary matrices.

* :func:`pre_iwasawa` -- ``A = V_Q D_L R_U`` with ``L`` symmetric positive definite.
* :func:`free_factorize` -- ``A = V_{DB^-1} D_B J V_{B^-1 A}`` for invertible ``B``.
* :func:`joint_svd` -- ``U = W diag(sigma) V^T`` with real orthogonal ``W, V``.
* :func:`tau_rotate` -- a unit-modulus ``tau`` making ``Im(tau U)`` well conditioned;
  :func:`tau_pencil` forms the symmetric matrix ``Im(tau U)^-1 Re(tau U)``.
* :func:`block_factorize_unitary` / :func:`conjugate_pair_factorize` --
  ``U = W diag(D1, D2)`` when ``U^T U`` is block-diagonal, and
  ``U = W diag(D, conj(D))`` when additionally the blocks are conjugate.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    NotBlockDiagonal,
    NotConjugatePair,
    NotFree,
    NotSPD,
    NotSymplectic,
    NotUnitary,
    NumericalBreakdown,
    RealityCheckFailed,
)
from .linalg import (
    eig_clusters,
    is_unitary,
    min_singular_value,
    spd_sqrt,
    sym_eig,
    symmetrize,
)
from .symplectic import block_diag2, blocks, gen_dl, gen_ru, gen_vq, is_symplectic

CLUSTER_GAP = 1e-8
BLOCK_TOL = 1e-8


@dataclass(frozen=True)
class PreIwasawaFactors:
    q: np.ndarray
    l: np.ndarray
    u: np.ndarray

    def reconstruct(self):
        return gen_vq(self.q) @ gen_dl(self.l) @ gen_ru(self.u)


@dataclass(frozen=True)
class FreeFactors:
    q_out: np.ndarray
    b: np.ndarray
    p: np.ndarray

    def reconstruct(self):
        n = self.b.shape[0]
        j = np.block([[np.zeros((n, n)), np.eye(n)], [-np.eye(n), np.zeros((n, n))]])
        return gen_vq(self.q_out) @ gen_dl(self.b) @ j @ gen_vq(self.p)


@dataclass(frozen=True)
class JointSvd:
    w: np.ndarray
    sigma: np.ndarray
    v: np.ndarray

    def reconstruct(self):
        return (self.w * self.sigma) @ self.v.T


@dataclass(frozen=True)
class TauChoice:
    tau: complex
    exceptional: tuple
    margin: float


@dataclass(frozen=True)
class BlockFactors:
    w: np.ndarray
    delta1: np.ndarray
    delta2: np.ndarray

    def reconstruct(self):
        return self.w @ block_diag2(self.delta1, self.delta2)


@dataclass(frozen=True)
class ConjugatePairFactors:
    w: np.ndarray
    delta: np.ndarray

    @property
    def delta1(self):
        return self.delta

    @property
    def delta2(self):
        return self.delta.conj()

    def reconstruct(self):
        return self.w @ block_diag2(self.delta, self.delta.conj())


def _check_symplectic(a, tol=1e-9):
    a = np.asarray(a, dtype=float)
    scale = max(1.0, np.linalg.norm(a, 2) ** 2)
    ok, res = is_symplectic(a, tol * scale)
    if not ok:
        raise NotSymplectic(f"symplectic residual {res:.3e}")
    return a


def pre_iwasawa(a):
    """Factor a symplectic matrix as ``V_Q D_L R_U`` with ``L`` symmetric.

    With blocks ``A, B, C, D`` and ``S = A A^T + B B^T``:
    ``L = S^(1/2)``, ``U = L^-1 (A + iB)``, ``Q = (C A^T + D B^T) S^-1``.
    """
    a = _check_symplectic(a)
    ab, bb, cb, db = blocks(a)
    s = symmetrize(ab @ ab.T + bb @ bb.T)
    try:
        l = spd_sqrt(s)
    except NotSPD as exc:
        raise NumericalBreakdown(f"A A^T + B B^T is not SPD: {exc}") from exc
    u = np.linalg.solve(l, ab + 1j * bb)
    q = symmetrize(np.linalg.solve(s, (cb @ ab.T + db @ bb.T).T).T)
    return PreIwasawaFactors(q=q, l=l, u=u)


def free_factorize(a, threshold=1e-10):
    """Factor a free symplectic matrix as ``V_{DB^-1} D_B J V_{B^-1 A}``."""
    a = _check_symplectic(a)
    ab, bb, cb, db = blocks(a)
    if min_singular_value(bb) <= threshold * max(np.linalg.norm(bb, 2), 1e-300):
        raise NotFree("upper-right block B is singular; use the tau-rotation path")
    q_out = np.linalg.solve(bb.T, db.T).T
    p = np.linalg.solve(bb, ab)
    for name, m in (("D B^-1", q_out), ("B^-1 A", p)):
        if np.linalg.norm(m - m.T) > 1e-9 * max(np.linalg.norm(m), 1.0):
            raise NumericalBreakdown(f"{name} is not symmetric")
    return FreeFactors(q_out=symmetrize(q_out), b=bb.copy(), p=symmetrize(p))


def _jacobi_cleanup(v, m, sweeps=3):
    """Real Jacobi rotations removing residual off-diagonal mass of ``v^T m v``.

    ``m`` is complex symmetric with commuting real and imaginary parts, so a
    real rotation diagonalizing a 2x2 sub-block exists; it is taken from the
    part (real or imaginary) with the larger eigenvalue gap.
    """
    n = v.shape[0]
    for _ in range(sweeps):
        d = v.T @ m @ v
        off = np.abs(d - np.diag(np.diag(d)))
        if off.max(initial=0.0) < 1e-14:
            break
        for i in range(n - 1):
            for j in range(i + 1, n):
                d = v.T @ m @ v
                b = d[i, j]
                if abs(b) < 1e-14:
                    continue
                sub = np.array([[d[i, i], b], [b, d[j, j]]])
                re, im = sub.real, sub.imag
                gap_re = np.hypot(re[0, 0] - re[1, 1], 2 * re[0, 1])
                gap_im = np.hypot(im[0, 0] - im[1, 1], 2 * im[0, 1])
                part = re if gap_re >= gap_im else im
                theta = 0.5 * np.arctan2(2 * part[0, 1], part[0, 0] - part[1, 1])
                c, s = np.cos(theta), np.sin(theta)
                vi, vj = v[:, i].copy(), v[:, j].copy()
                v[:, i] = c * vi + s * vj
                v[:, j] = -s * vi + c * vj
    return v


def _principal_sqrt(z):
    ang = np.angle(z)
    ang = np.where(ang <= -np.pi, np.pi, ang)
    return np.exp(0.5j * ang)


def joint_svd(u, cluster_gap=CLUSTER_GAP):
    """Joint real SVD ``U = W diag(sigma) V^T`` of a unitary matrix.

    ``M = U^T U`` is unitary and complex symmetric, so ``Re M`` and ``Im M``
    commute.  ``V`` diagonalizes ``Re M`` and, inside each cluster of repeated
    eigenvalues, ``Im M``.  ``sigma`` is the principal square root of the
    diagonal of ``V^T M V`` and ``W = U V diag(sigma)^-1``, which is real.
    """
    u = np.atleast_2d(np.asarray(u, dtype=complex))
    if u.shape[0] != u.shape[1] or not is_unitary(u, 1e-9):
        raise NotUnitary("joint_svd needs a unitary matrix")
    m = u.T @ u
    m = 0.5 * (m + m.T)
    lam, v = sym_eig(m.real, tol=1e-8)
    for sl in eig_clusters(lam, cluster_gap):
        if sl.stop - sl.start > 1:
            vc = v[:, sl]
            _, rot = sym_eig(symmetrize(vc.T @ m.imag @ vc), tol=1e-8)
            v[:, sl] = vc @ rot
    v = _jacobi_cleanup(v, m)
    sigma = _principal_sqrt(np.diag(v.T @ m @ v))
    w = (u @ v) / sigma
    imag = np.abs(w.imag).max(initial=0.0)
    if imag > 1e-8:
        raise RealityCheckFailed(f"W has imaginary part {imag:.3e}")
    return JointSvd(w=w.real.copy(), sigma=sigma, v=v)


def _angle_distance(a, b):
    return abs(np.angle(a * np.conj(b)))


def exceptional_taus(u):
    """The at most ``2m`` unit-modulus values where ``Im(tau U)`` is singular."""
    sv = joint_svd(u)
    out = []
    for s in sv.sigma:
        for cand in (np.conj(s), -np.conj(s)):
            if all(_angle_distance(cand, e) > 1e-10 for e in out):
                out.append(complex(cand))
    return tuple(out)


def _margin(u, theta):
    return min_singular_value((np.exp(1j * theta) * u).imag)


def tau_rotate(u, grid=256, xtol=1e-12):
    """Choose ``tau`` on the unit circle maximizing ``sigma_min(Im(tau U))``.

    A coarse scan over ``grid`` angles in ``[0, pi)`` (the margin is
    ``pi``-periodic) is refined by golden-section search to ``xtol``.
    """
    u = np.atleast_2d(np.asarray(u, dtype=complex))
    exceptional = exceptional_taus(u)
    thetas = np.arange(grid) * (np.pi / grid)
    vals = np.array([_margin(u, t) for t in thetas])
    k = int(np.argmax(vals))
    step = np.pi / grid
    lo, hi = thetas[k] - step, thetas[k] + step
    invphi = (np.sqrt(5.0) - 1) / 2
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = _margin(u, x1), _margin(u, x2)
    while hi - lo > xtol:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = _margin(u, x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = _margin(u, x1)
    best = 0.5 * (lo + hi)
    best_val = _margin(u, best)
    if best_val <= vals[k] + 1e-15:
        best, best_val = thetas[k], vals[k]
    best = best % np.pi
    return TauChoice(tau=complex(np.exp(1j * best)), exceptional=exceptional, margin=float(best_val))


def off_block_norm(m, d=None):
    """Frobenius norm of the off-diagonal ``d x d`` blocks relative to ``||m||_F``."""
    m = np.asarray(m)
    if d is None:
        d = m.shape[0] // 2
    total = np.linalg.norm(m)
    if total == 0:
        return 0.0
    off = np.hypot(np.linalg.norm(m[:d, d:]), np.linalg.norm(m[d:, :d]))
    return float(off / total)


def conj_mismatch(m, d=None):
    """``||M22 - conj(M11)||_F / ||M||_F``."""
    m = np.asarray(m)
    if d is None:
        d = m.shape[0] // 2
    total = np.linalg.norm(m)
    if total == 0:
        return 0.0
    return float(np.linalg.norm(m[d:, d:] - m[:d, :d].conj()) / total)


def tau_pencil(u):
    """``(tau, P)`` with ``P = Im(tau U)^-1 Re(tau U)`` for a robust ``tau``.

    ``P`` is real symmetric; for unitaries of even side it is block-diagonal
    exactly when ``U^T U`` is.
    """
    u = np.atleast_2d(np.asarray(u, dtype=complex))
    choice = tau_rotate(u)
    tu = choice.tau * u
    return choice, symmetrize(np.linalg.solve(tu.imag, tu.real))


def _even_side(u):
    u = np.atleast_2d(np.asarray(u, dtype=complex))
    if u.shape[0] != u.shape[1] or u.shape[0] % 2:
        raise NotBlockDiagonal("need a square matrix of even side")
    if not is_unitary(u, 1e-9):
        raise NotUnitary("input is not unitary")
    return u, u.shape[0] // 2


def block_factorize_unitary(u, tol=BLOCK_TOL):
    """Write ``U = W diag(D1, D2)`` when ``U^T U`` is block-diagonal.

    Rotate by ``tau`` so that ``B = Im(tau U)`` is invertible, form
    ``P = B^-1 Re(tau U)`` (block-diagonal and symmetric),
    ``U' = (I + P^2)^(-1/2) (P + iI)`` and ``W' = B Im(U')^-1``.  Each diagonal
    block of ``U'`` is split with :func:`joint_svd` and ``tau`` is undone on
    the unitary factors.
    """
    u, d = _even_side(u)
    if off_block_norm(u.T @ u, d) > tol:
        raise NotBlockDiagonal("U^T U is not block-diagonal")
    choice, p = tau_pencil(u)
    b = (choice.tau * u).imag
    if off_block_norm(p, d) > max(tol, 1e-8) * max(1.0, np.linalg.cond(b)):
        raise NotBlockDiagonal("P = Im(tau U)^-1 Re(tau U) is not block-diagonal")
    p = block_diag2(p[:d, :d], p[d:, d:])
    n = 2 * d
    root_inv = np.linalg.inv(spd_sqrt(np.eye(n) + p @ p))
    u_prime = root_inv @ (p + 1j * np.eye(n))
    w_prime = np.linalg.solve(u_prime.imag.T, b.T).T
    j1 = joint_svd(u_prime[:d, :d])
    j2 = joint_svd(u_prime[d:, d:])
    w = w_prime @ block_diag2(j1.w, j2.w)
    tc = np.conj(choice.tau)
    delta1 = tc * (j1.sigma[:, None] * j1.v.T)
    delta2 = tc * (j2.sigma[:, None] * j2.v.T)
    return BlockFactors(w=w, delta1=delta1, delta2=delta2)


def conjugate_pair_factorize(u, tol=BLOCK_TOL):
    """Write ``U = W diag(D, conj(D))`` when ``U^T U = diag(M, conj(M))``."""
    u, d = _even_side(u)
    m = u.T @ u
    if off_block_norm(m, d) > tol or conj_mismatch(m, d) > tol:
        raise NotConjugatePair("U^T U is not of the form diag(M, conj(M))")
    bf = block_factorize_unitary(u, tol)
    w0 = bf.delta1 @ bf.delta2.T
    if np.abs(w0.imag).max() > 1e-8:
        raise RealityCheckFailed("D1 D2^T is not real")
    w = bf.w @ block_diag2(np.eye(d), w0.real.T)
    return ConjugatePairFactors(w=w, delta=bf.delta1)
