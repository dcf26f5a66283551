"""Dense real/complex matrix primitives.

Everything here is a pure function of its inputs.  Tolerances are relative
to the Frobenius norm of the input unless stated otherwise.
"""

import numpy as np
import scipy.linalg

from .errors import NoConvergence, NotSPD, NotSymmetric

SPD_CLAMP = 1e-13


def _fro(m):
    return float(np.linalg.norm(m))


def is_symmetric(m, tol=1e-10):
    m = np.asarray(m)
    return _fro(m - m.T) <= tol * max(_fro(m), 1.0)


def symmetrize(m):
    m = np.asarray(m)
    return 0.5 * (m + m.T)


def _fix_signs(vecs, tol=1e-12):
    # first component that is clearly nonzero is made positive
    vecs = vecs.copy()
    for j in range(vecs.shape[1]):
        col = vecs[:, j]
        idx = np.flatnonzero(np.abs(col) > tol * max(np.abs(col).max(), 1e-300))
        if idx.size and col[idx[0]] < 0:
            vecs[:, j] = -col
    return vecs


def _canonical_cluster_basis(vecs):
    """Orthonormal basis of span(vecs) that depends only on the span."""
    k = vecs.shape[1]
    if k == 1:
        return vecs
    proj = vecs @ vecs.T
    q, _, _ = scipy.linalg.qr(proj, pivoting=True)
    return q[:, :k]


def eig_clusters(values, gap):
    """Split a sorted eigenvalue vector into runs whose neighbours differ by <= gap."""
    clusters = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or abs(values[i - 1] - values[i]) > gap:
            clusters.append(slice(start, i))
            start = i
    return clusters


def sym_eig(m, tol=1e-10, cluster_gap=None):
    """Eigen-decomposition of a real symmetric matrix.

    Returns ``(lam, vecs)`` with eigenvalues in descending order and
    ``m == vecs @ diag(lam) @ vecs.T``.  Eigenvectors belonging to a cluster of
    (numerically) repeated eigenvalues are replaced by a canonical basis of the
    cluster's span, and every eigenvector has its first nonzero component
    positive, so identical inputs always produce identical outputs.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetric("matrix must be square")
    if not is_symmetric(m, tol):
        raise NotSymmetric(f"asymmetry {_fro(m - m.T):.3e} exceeds tolerance")
    m = symmetrize(m)
    try:
        lam, vecs = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    lam = lam[::-1]
    vecs = vecs[:, ::-1]
    if cluster_gap is None:
        cluster_gap = 1e-12 * max(_fro(m), 1.0)
    for sl in eig_clusters(lam, cluster_gap):
        if sl.stop - sl.start > 1:
            vecs[:, sl] = _canonical_cluster_basis(vecs[:, sl])
    return lam, _fix_signs(vecs)


def spd_sqrt(m):
    """Symmetric positive definite square root.

    Eigenvalues in ``[-1e-13 * lam_max, 1e-13 * lam_max]`` are clamped up to
    ``1e-13 * lam_max``; anything more negative raises :class:`NotSPD`.
    """
    lam, vecs = sym_eig(m)
    top = lam[0]
    if top <= 0:
        raise NotSPD("largest eigenvalue is not positive")
    floor = SPD_CLAMP * top
    if lam[-1] < -floor:
        raise NotSPD(f"eigenvalue {lam[-1]:.3e} is negative")
    lam = np.maximum(lam, floor)
    root = (vecs * np.sqrt(lam)) @ vecs.T
    return symmetrize(root)


def svd_real(m):
    """Real SVD ``m = u @ diag(s) @ v.T`` with singular values descending."""
    m = np.asarray(m, dtype=float)
    if not np.any(m):
        r, c = m.shape
        return np.eye(r), np.zeros(min(r, c)), np.eye(c)
    try:
        u, s, vt = np.linalg.svd(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return u, s, vt.T


def min_singular_value(m):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("square matrix required")
    return float(np.linalg.svd(m, compute_uv=False).min())


def is_unitary(u, tol=1e-10):
    u = np.asarray(u)
    return _fro(u.conj().T @ u - np.eye(u.shape[1])) < tol


def is_orthogonal(w, tol=1e-10):
    w = np.asarray(w)
    return np.isrealobj(w) and _fro(w.T @ w - np.eye(w.shape[1])) < tol
