"""Symplectic matrices: generators, group operations, sampling and a catalog.

Matrices are plain ``numpy`` arrays of shape ``(2n, 2n)`` with the block
layout ``[[A, B], [C, D]]``.  The catalog entries reproduce the standard
time-frequency representations (short-time Fourier transform, ambiguity
function, tau-Wigner family) as elements of Sp(4d, R).
"""

import numpy as np

from .errors import (
    BadParam,
    DimensionMismatch,
    NotSymmetric,
    NotUnitary,
    OddDimension,
    Singular,
    UnknownName,
)
from .linalg import is_symmetric, is_unitary, min_singular_value, symmetrize

DEFAULT_TOL = 1e-10


def standard_j(n):
    """The matrix ``[[0, I], [-I, 0]]`` of side ``2n``."""
    if n < 1:
        raise BadParam("n must be >= 1")
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]])


def half_dim(m):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise OddDimension("matrix must be square")
    if m.shape[0] % 2:
        raise OddDimension(f"side {m.shape[0]} is odd")
    return m.shape[0] // 2


def blocks(m):
    """Return the four ``n x n`` blocks ``A, B, C, D``."""
    n = half_dim(m)
    return m[:n, :n], m[:n, n:], m[n:, :n], m[n:, n:]


def symplectic_residual(m):
    m = np.asarray(m, dtype=float)
    j = standard_j(half_dim(m))
    return float(np.linalg.norm(m.T @ j @ m - j))


def is_symplectic(m, tol=DEFAULT_TOL):
    """Check ``m.T J m == J``; returns ``(ok, residual)``.

    The residual is compared against ``tol * side``.
    """
    m = np.asarray(m)
    if np.iscomplexobj(m):
        if np.any(m.imag):
            return False, float("inf")
        m = m.real
    residual = symplectic_residual(m)
    return residual <= tol * m.shape[0], residual


def gen_vq(q):
    """Lower shear ``[[I, 0], [Q, I]]`` for symmetric ``Q``."""
    q = np.atleast_2d(np.asarray(q, dtype=float))
    if not is_symmetric(q, 1e-10):
        raise NotSymmetric("Q must be symmetric")
    n = q.shape[0]
    eye = np.eye(n)
    return np.block([[eye, np.zeros((n, n))], [symmetrize(q), eye]])


def gen_dl(l):
    """Dilation ``[[L, 0], [0, L^-T]]`` for invertible ``L``."""
    l = np.atleast_2d(np.asarray(l, dtype=float))
    if l.shape[0] != l.shape[1]:
        raise Singular("L must be square")
    if min_singular_value(l) <= 1e-12:
        raise Singular("L is singular")
    n = l.shape[0]
    zero = np.zeros((n, n))
    return np.block([[l, zero], [zero, np.linalg.inv(l).T]])


def gen_ru(u):
    """Symplectic rotation ``[[Re U, Im U], [-Im U, Re U]]`` for unitary ``U``."""
    u = np.atleast_2d(np.asarray(u, dtype=complex))
    if u.shape[0] != u.shape[1] or not is_unitary(u, 1e-10):
        raise NotUnitary("U must be unitary")
    a, b = u.real, u.imag
    return np.block([[a, b], [-b, a]])


def embed_pair(a1, a2):
    """Embed ``(a1, a2)`` from Sp(2n) x Sp(2n) into Sp(4n).

    Each block of the result is the block-diagonal combination of the
    corresponding blocks of the inputs, which sends the generator pairs
    ``(D_L1, D_L2)``, ``(V_Q1, V_Q2)`` and ``(R_U1, R_U2)`` to
    ``D_diag(L1,L2)``, ``V_diag(Q1,Q2)`` and ``R_diag(U1,U2)``.
    """
    a1 = np.asarray(a1, dtype=float)
    a2 = np.asarray(a2, dtype=float)
    if a1.shape != a2.shape:
        raise DimensionMismatch(f"{a1.shape} vs {a2.shape}")
    n = half_dim(a1)
    out = np.zeros((4 * n, 4 * n))
    for k, (b1, b2) in enumerate(zip(blocks(a1), blocks(a2))):
        r, c = divmod(k, 2)
        out[2 * n * r: 2 * n * r + n, 2 * n * c: 2 * n * c + n] = b1
        out[2 * n * r + n: 2 * n * (r + 1), 2 * n * c + n: 2 * n * (c + 1)] = b2
    return out


def symplectic_inverse(a):
    """Closed-form inverse ``-J a^T J``."""
    a = np.asarray(a, dtype=float)
    j = standard_j(half_dim(a))
    return -j @ a.T @ j


def block_diag2(x, y):
    """``diag(x, y)`` for two square blocks (real or complex)."""
    x = np.atleast_2d(x)
    y = np.atleast_2d(y)
    dtype = np.result_type(x, y)
    out = np.zeros((x.shape[0] + y.shape[0],) * 2, dtype=dtype)
    out[: x.shape[0], : x.shape[0]] = x
    out[x.shape[0]:, x.shape[0]:] = y
    return out


def _rng(seed):
    # counter-based bit generator: streams are reproducible per seed
    return np.random.Generator(np.random.Philox(seed))


def random_orthogonal(n, rng):
    z = rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * np.sign(np.diag(r))


def random_unitary(n, rng):
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_symmetric(n, rng):
    g = rng.standard_normal((n, n))
    return 0.5 * (g + g.T)


def random_invertible(n, rng, lo=0.5, hi=2.0):
    """Random ``L`` with singular values in ``[lo, hi]``."""
    s = rng.uniform(lo, hi, size=n)
    return (random_orthogonal(n, rng) * s) @ random_orthogonal(n, rng).T


def random_symplectic(n, seed=0):
    """Sample ``V_Q D_L R_U`` with reproducible factors for the given seed."""
    if n < 1:
        raise BadParam("n must be >= 1")
    rng = _rng(seed)
    q = random_symmetric(n, rng)
    l = random_invertible(n, rng)
    u = random_unitary(n, rng)
    return gen_vq(q) @ gen_dl(l) @ gen_ru(u)


# -- catalog -----------------------------------------------------------------

CATALOG_NAMES = ("stft", "ambiguity", "tau_wigner", "fourier", "chirp", "dilation")


def _grid4(rows, d):
    """Assemble a ``4d x 4d`` matrix from a 4x4 table of scalar multiples of I_d."""
    eye = np.eye(d)
    return np.block([[c * eye for c in row] for row in rows])


def _stft_rows():
    return [
        [1, -1, 0, 0],
        [0, 0, 1, 1],
        [0, 0, 0, -1],
        [-1, 0, 0, 0],
    ]


def _ambiguity_rows():
    return [
        [1, -1, 0, 0],
        [0, 0, 1, 1],
        [0, 0, 0.5, -0.5],
        [-0.5, -0.5, 0, 0],
    ]


def _tau_rows(tau):
    return [
        [1 - tau, tau, 0, 0],
        [0, 0, tau, -(1 - tau)],
        [0, 0, 1, 1],
        [-1, 1, 0, 0],
    ]


def catalog(name, d=1, tau=None, q=None, l=None):
    """Symplectic matrix of a named time-frequency representation in Sp(4d, R).

    ``stft``, ``ambiguity`` and ``tau_wigner`` (parameter ``tau``) give the
    short-time Fourier transform, the ambiguity function and the tau-Wigner
    distribution.  ``fourier``, ``chirp`` (symmetric ``q``, default ``I``) and
    ``dilation`` (invertible ``l``, default ``2 I``) are the elementary
    matrices ``J``, ``V_Q`` and ``D_L`` of side ``4d``.
    """
    if name not in CATALOG_NAMES:
        raise UnknownName(name)
    if int(d) != d or d < 1:
        raise BadParam("d must be a positive integer")
    d = int(d)
    if name == "stft":
        return _grid4(_stft_rows(), d)
    if name == "ambiguity":
        return _grid4(_ambiguity_rows(), d)
    if name == "tau_wigner":
        if tau is None or not np.isfinite(tau):
            raise BadParam("tau_wigner needs a finite real tau")
        return _grid4(_tau_rows(float(tau)), d)
    if name == "fourier":
        return standard_j(2 * d)
    if name == "chirp":
        q = np.eye(2 * d) if q is None else np.atleast_2d(np.asarray(q, dtype=float))
        if q.shape != (2 * d, 2 * d):
            raise BadParam(f"chirp needs a {2 * d}x{2 * d} symmetric Q")
        try:
            return gen_vq(q)
        except NotSymmetric as exc:
            raise BadParam(str(exc)) from exc
    l = 2.0 * np.eye(2 * d) if l is None else np.atleast_2d(np.asarray(l, dtype=float))
    if l.shape != (2 * d, 2 * d):
        raise BadParam(f"dilation needs an invertible {2 * d}x{2 * d} L")
    try:
        return gen_dl(l)
    except Singular as exc:
        raise BadParam(str(exc)) from exc


# -- JSON --------------------------------------------------------------------

def to_json(m):
    m = np.asarray(m, dtype=float)
    return {"half_dim": half_dim(m), "entries": m.tolist()}


def from_json(obj):
    """Parse ``{"half_dim": n, "entries": [[...], ...]}`` into an array."""
    try:
        n = int(obj["half_dim"])
        m = np.array(obj["entries"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise BadParam(f"malformed matrix JSON: {exc}") from exc
    if m.shape != (2 * n, 2 * n):
        raise BadParam(f"entries shape {m.shape} does not match half_dim {n}")
    if not np.all(np.isfinite(m)):
        raise BadParam("entries must be finite")
    return m
