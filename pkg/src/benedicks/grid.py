"""Finite-grid realization of metaplectic operators and Wigner-type distributions.

Functions on ``R^m`` (``m`` in 1, 2, 4) are sampled on a centred grid
``x_j = (j - N/2) h`` per axis.  With critical sampling ``N h^2 = 1`` the
frequency grid of the centred DFT coincides with the position grid, so
Fourier transforms, chirps and dilations can be chained without changing
grids.  All operators track moduli only; global phases are not reproduced.
"""

import json
from dataclasses import dataclass

import numpy as np
import scipy.ndimage

from .decision import WitnessRecipe
from .decompositions import joint_svd, pre_iwasawa
from .errors import (
    BadK,
    BadParam,
    DimensionMismatch,
    GridMismatch,
    NotCriticallySampled,
    Singular,
    WitnessMismatch,
)
from .linalg import is_symmetric
from .symplectic import gen_ru, half_dim

SHAPES = ("gauss", "rect", "hermite", "sinc", "bump")
QUARTER_TOL = 1e-12
MAX_COND = 1e6
WITNESS_TOL = 5e-2


@dataclass(frozen=True)
class GridSpec:
    """Uniform centred grid with ``n`` points of spacing ``h`` on each of ``dims`` axes."""

    dims: int
    n: int
    h: float

    def __post_init__(self):
        if self.dims not in (1, 2, 4):
            raise BadParam("dims must be 1, 2 or 4")
        if self.n < 2 or self.n & (self.n - 1):
            raise BadParam("n must be a power of two")
        if not (self.h > 0 and np.isfinite(self.h)):
            raise BadParam("h must be positive")

    @classmethod
    def critical(cls, dims, n):
        """Critically sampled grid, ``h = 1 / sqrt(n)``."""
        return cls(dims, n, 1.0 / np.sqrt(n))

    @property
    def is_critical(self):
        return abs(self.n * self.h * self.h - 1.0) <= 1e-12

    @property
    def shape(self):
        return (self.n,) * self.dims

    @property
    def cell(self):
        return self.h ** self.dims

    def axis(self):
        return (np.arange(self.n) - self.n // 2) * self.h

    def mesh(self):
        """Sparse coordinate arrays, one per axis, broadcastable to :attr:`shape`."""
        return np.meshgrid(*([self.axis()] * self.dims), indexing="ij", sparse=True)

    def with_dims(self, dims):
        return GridSpec(dims, self.n, self.h)

    def to_json(self):
        return {"dims": self.dims, "N": self.n, "h": self.h, "order": "row-major"}


@dataclass(frozen=True)
class GridFunction:
    spec: GridSpec
    samples: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.samples, dtype=complex)
        if s.shape != self.spec.shape:
            if s.size != self.spec.n ** self.spec.dims:
                raise DimensionMismatch(f"samples of shape {s.shape} do not fit {self.spec}")
            s = s.reshape(self.spec.shape)
        if not np.all(np.isfinite(s)):
            raise BadParam("samples must be finite")
        object.__setattr__(self, "samples", s)

    def norm(self):
        return float(np.sqrt(np.sum(np.abs(self.samples) ** 2) * self.spec.cell))

    def abs(self):
        return GridFunction(self.spec, np.abs(self.samples))

    def conj(self):
        return GridFunction(self.spec, self.samples.conj())

    def replace(self, samples):
        return GridFunction(self.spec, samples)


@dataclass(frozen=True)
class SupportReport:
    eps: float
    area: float
    mass_fraction: float
    threshold: float

    def to_json(self):
        return {
            "eps": self.eps,
            "area": self.area,
            "mass_fraction": self.mass_fraction,
            "threshold": self.threshold,
        }


def rel_l2(a, b):
    """Relative L2 distance ``||a - b|| / ||b||`` of two sample arrays."""
    a = a.samples if isinstance(a, GridFunction) else np.asarray(a)
    b = b.samples if isinstance(b, GridFunction) else np.asarray(b)
    den = np.linalg.norm(b)
    num = np.linalg.norm(a - b)
    return float(num / den) if den else float(num)


# -- sampling ----------------------------------------------------------------

def _hermite_1d(x, k):
    # normalized Hermite functions for the e^{-pi x^2} convention
    prev = np.zeros_like(x)
    cur = 2 ** 0.25 * np.exp(-np.pi * x * x)
    for j in range(k):
        prev, cur = cur, (2 * np.sqrt(np.pi) * x * cur - np.sqrt(j) * prev) / np.sqrt(j + 1)
    return cur


def sample(shape, spec, a=1.0, k=0, center=None):
    """Sample a test signal on ``spec``.

    Parameters
    ----------
    shape : {"gauss", "rect", "hermite", "sinc", "bump"}
        ``gauss`` is ``2^(m/4) exp(-pi |x - center|^2)`` (unit L2 norm);
        ``rect`` is the indicator of ``[-a, a)^m``; ``hermite`` is the
        tensor power of the ``k``-th Hermite function; ``sinc`` is the grid
        function whose centred DFT is ``rect`` with half-width ``a``;
        ``bump`` is the tensor power of ``cos(pi x / 2a)^2`` on ``|x| < a``,
        a compactly supported function smooth enough for interpolation.
    spec : GridSpec
    a : float
        Half-width for ``rect``, ``sinc`` and ``bump``.
    k : int
        Order for ``hermite``.
    center : sequence of float, optional
        Shift for ``gauss``.
    """
    m = spec.dims
    mesh = spec.mesh()
    if shape == "gauss":
        c = np.zeros(m) if center is None else np.broadcast_to(np.asarray(center, float), (m,))
        r2 = sum((x - ci) ** 2 for x, ci in zip(mesh, c))
        vals = 2 ** (m / 4) * np.exp(-np.pi * r2)
    elif shape in ("rect", "sinc"):
        if not a > 0:
            raise BadParam("half-width a must be positive")
        vals = np.ones(spec.shape)
        for x in mesh:
            vals = vals * ((x >= -a) & (x < a))
        if shape == "sinc":
            rect = GridFunction(spec, vals)
            return apply_fourier(rect, range(m), inverse=True)
    elif shape == "bump":
        if not a > 0:
            raise BadParam("half-width a must be positive")
        vals = np.ones(spec.shape)
        for x in mesh:
            vals = vals * np.where(np.abs(x) < a, np.cos(np.pi * x / (2 * a)) ** 2, 0.0)
    elif shape == "hermite":
        if int(k) != k or k < 0:
            raise BadParam("hermite order k must be a non-negative integer")
        vals = np.ones(spec.shape)
        for x in mesh:
            vals = vals * _hermite_1d(x, int(k))
    else:
        raise BadParam(f"unknown shape {shape!r}; expected one of {SHAPES}")
    return GridFunction(spec, np.broadcast_to(vals, spec.shape).astype(complex))


def tensor(f, g):
    """``(f tensor g)(x, y) = f(x) g(y)`` on the grid of twice the dimension."""
    if f.spec != g.spec:
        raise GridMismatch("f and g live on different grids")
    out = np.multiply.outer(f.samples, g.samples)
    return GridFunction(f.spec.with_dims(2 * f.spec.dims), out)


# -- elementary operators ----------------------------------------------------

def apply_chirp(fn, q):
    """Multiply by ``exp(i pi x^T Q x)``."""
    m = fn.spec.dims
    q = np.atleast_2d(np.asarray(q, dtype=float))
    if q.shape != (m, m):
        raise DimensionMismatch(f"Q of shape {q.shape} on a {m}-dimensional grid")
    if not is_symmetric(q):
        raise BadParam("Q must be symmetric")
    if not np.any(q):
        return fn.replace(fn.samples.copy())
    mesh = fn.spec.mesh()
    phase = np.zeros(fn.spec.shape)
    for i in range(m):
        for j in range(m):
            if q[i, j]:
                phase = phase + q[i, j] * mesh[i] * mesh[j]
    return fn.replace(fn.samples * np.exp(1j * np.pi * phase))


def _parity(arr, axis):
    # x_j -> -x_j is the index map j -> (N - j) mod N
    return np.roll(np.flip(arr, axis=axis), 1, axis=axis)


def _signed_permutation(l):
    """Return ``(perm, signs)`` if ``l`` is a signed permutation matrix, else ``None``."""
    m = l.shape[0]
    if not np.all(np.isin(l, (-1.0, 0.0, 1.0))):
        return None
    if not np.all(np.count_nonzero(l, axis=0) == 1) or not np.all(np.count_nonzero(l, axis=1) == 1):
        return None
    perm = np.array([int(np.flatnonzero(l[:, k])[0]) for k in range(m)])
    signs = np.array([l[perm[k], k] for k in range(m)])
    return perm, signs


def _check_dilation(l, m):
    l = np.atleast_2d(np.asarray(l, dtype=float))
    if l.shape != (m, m):
        raise DimensionMismatch(f"L of shape {l.shape} on a {m}-dimensional grid")
    sv = np.linalg.svd(l, compute_uv=False)
    if sv.min() <= 1e-12 or sv.max() / sv.min() >= MAX_COND:
        raise Singular("L is singular or too badly conditioned")
    return l


def _interp(arr, coords, order):
    kw = dict(order=order, mode="grid-constant", cval=0.0, prefilter=order > 1)
    re = scipy.ndimage.map_coordinates(arr.real, coords, **kw)
    im = scipy.ndimage.map_coordinates(arr.imag, coords, **kw)
    return re + 1j * im


def _axis_groups(l):
    """Connected groups of axes coupled by the nonzero pattern of ``l``."""
    m = l.shape[0]
    linked = (l != 0) | (l.T != 0)
    groups, seen = [], set()
    for start in range(m):
        if start in seen:
            continue
        stack, group = [start], set()
        while stack:
            k = stack.pop()
            if k in group:
                continue
            group.add(k)
            stack.extend(int(j) for j in np.flatnonzero(linked[k]) if j not in group)
        seen |= group
        groups.append(sorted(group))
    return groups


def _permute_exact(arr, perm, signs):
    for k, s in enumerate(signs):
        if s < 0:
            arr = _parity(arr, k)
    # output axis perm[k] carries input axis k
    return np.transpose(arr, np.argsort(perm))


def _dilate_group(arr, spec, axes, sub, order):
    """Resample the axes ``axes`` of ``arr`` at ``sub^-1 x``; other axes are batch axes."""
    k = len(axes)
    moved = np.moveaxis(arr, axes, range(arr.ndim - k, arr.ndim))
    batch = moved.shape[: arr.ndim - k]
    flat = moved.reshape((-1,) + (spec.n,) * k)
    axis = spec.axis()
    mesh = np.meshgrid(*([axis] * k), indexing="ij")
    pts = np.stack([x.ravel() for x in mesh])
    src = np.linalg.inv(sub) @ pts / spec.h + spec.n // 2
    out = np.empty_like(flat)
    for i in range(flat.shape[0]):
        out[i] = _interp(flat[i], src, order).reshape((spec.n,) * k)
    out = out.reshape(batch + (spec.n,) * k) / np.sqrt(abs(np.linalg.det(sub)))
    return np.moveaxis(out, range(arr.ndim - k, arr.ndim), axes)


def apply_dilation(fn, l, order=5):
    """``|det L|^(-1/2) F(L^-1 x)`` by spline interpolation with zero extension.

    Signed permutation matrices are applied exactly by index permutation
    and reversal.  When ``L`` only couples disjoint groups of axes, each
    group is resampled separately on its own lower-dimensional grid.
    ``order`` selects the spline degree (1 is multilinear).
    """
    spec = fn.spec
    l = _check_dilation(l, spec.dims)
    sp = _signed_permutation(l)
    if sp is not None:
        return fn.replace(_permute_exact(fn.samples, *sp).copy())
    arr = fn.samples
    for axes in _axis_groups(l):
        sub = l[np.ix_(axes, axes)]
        sp = _signed_permutation(sub)
        if sp is not None:
            front = range(len(axes))
            moved = np.moveaxis(arr, axes, front)
            perm, signs = sp
            perm = np.concatenate([perm, np.arange(len(axes), arr.ndim)])
            signs = np.concatenate([signs, np.ones(arr.ndim - len(axes))])
            arr = np.moveaxis(_permute_exact(moved, perm, signs), front, axes)
        else:
            arr = _dilate_group(arr, spec, axes, sub, order)
    return fn.replace(np.ascontiguousarray(arr))


def _require_critical(spec):
    if not spec.is_critical:
        raise NotCriticallySampled(f"N h^2 = {spec.n * spec.h ** 2:.6g}, expected 1")


def _fft_axes(arr, axes, inverse=False):
    axes = tuple(axes)
    if not axes:
        return arr.copy()
    f = np.fft.ifftn if inverse else np.fft.fftn
    shifted = np.fft.ifftshift(arr, axes=axes)
    return np.fft.fftshift(f(shifted, axes=axes, norm="ortho"), axes=axes)


def apply_fourier(fn, axes=None, inverse=False):
    """Fourier transform ``int f(x) exp(-2 pi i x w) dx`` along ``axes``.

    On a critically sampled grid the centred unitary DFT equals the Riemann
    sum with weight ``h`` per transformed axis.
    """
    _require_critical(fn.spec)
    axes = tuple(range(fn.spec.dims)) if axes is None else tuple(axes)
    if any(a < 0 or a >= fn.spec.dims for a in axes):
        raise DimensionMismatch(f"axes {axes} out of range")
    return fn.replace(_fft_axes(fn.samples, axes, inverse))


def _quarter_turns(arr, axis, k):
    k %= 4
    if k == 0:
        return arr
    if k == 2:
        return _parity(arr, axis)
    return _fft_axes(arr, (axis,), inverse=(k == 3))


def _resample_axis(arr, axis, src, order=5):
    """Evaluate ``arr`` along ``axis`` at fractional indices ``src``."""
    moved = np.moveaxis(arr, axis, -1)
    flat = moved.reshape(-1, moved.shape[-1])
    rows = np.broadcast_to(np.arange(flat.shape[0])[:, None], (flat.shape[0], src.size))
    cols = np.broadcast_to(src[None, :], rows.shape)
    vals = _interp(flat, np.stack([rows.ravel(), cols.ravel()]), order)
    out = vals.reshape(moved.shape[:-1] + (src.size,))
    return np.moveaxis(out, -1, axis)


def _frac_axis(arr, spec, axis, sigma, order=5):
    alpha = float(np.angle(sigma))
    k = int(np.floor((alpha - np.pi / 4) / (np.pi / 2)))
    rest = alpha - k * np.pi / 2  # in [pi/4, 3pi/4)
    if abs(rest - np.pi / 2) <= QUARTER_TOL:
        return _quarter_turns(arr, axis, k + 1)
    arr = _quarter_turns(arr, axis, k)
    _require_critical(spec)
    cot, s = np.cos(rest) / np.sin(rest), np.sin(rest)
    x = spec.axis()
    shape = [1] * arr.ndim
    shape[axis] = spec.n
    chirp = np.exp(1j * np.pi * cot * x * x).reshape(shape)
    out = _fft_axes(arr * chirp, (axis,))
    # frequency variable is w / sin(rest)
    out = _resample_axis(out, axis, x / s / spec.h + spec.n // 2, order)
    out = out * chirp
    before, after = np.linalg.norm(arr), np.linalg.norm(out)
    return out * (before / after) if after > 0 else out


def apply_frac_ft(fn, sigma, order=5):
    """Fractional Fourier transform with unit-modulus parameter ``sigma[j]`` on axis ``j``.

    ``sigma = 1`` is the identity, ``-1`` the parity, ``i`` the Fourier
    transform and ``-i`` its inverse; these (and rotations by whole quarter
    turns) are applied exactly.  Other angles use chirp, FFT, a rescaling
    of the frequency axis by ``sin(alpha)`` and a second chirp, followed by a
    rescale restoring the L2 norm.
    """
    sigma = np.atleast_1d(np.asarray(sigma, dtype=complex))
    if sigma.shape != (fn.spec.dims,):
        raise DimensionMismatch(f"need {fn.spec.dims} parameters, got {sigma.size}")
    if np.any(np.abs(np.abs(sigma) - 1) > 1e-9):
        raise BadParam("sigma entries must have unit modulus")
    arr = fn.samples
    for axis, s in enumerate(sigma):
        arr = _frac_axis(arr, fn.spec, axis, s, order)
    return fn.replace(arr if arr is not fn.samples else arr.copy())


def apply_metaplectic(a, fn, order=5):
    """Realize ``mu(a) F`` on the grid up to a global phase.

    With ``a = V_Q D_L R_U`` and ``U = W diag(sigma) V^T`` the pipeline is
    ``dilation(V^T)``, ``frac_ft(sigma)``, ``dilation(L W)``, ``chirp(Q)``.
    """
    a = np.asarray(a, dtype=float)
    if 2 * fn.spec.dims != a.shape[0] or half_dim(a) != fn.spec.dims:
        raise DimensionMismatch(f"matrix of side {a.shape[0]} on a {fn.spec.dims}-dimensional grid")
    pi = pre_iwasawa(a)
    sv = joint_svd(pi.u)
    out = apply_dilation(fn, sv.v.T, order)
    out = apply_frac_ft(out, sv.sigma, order)
    out = apply_dilation(out, pi.l @ sv.w, order)
    return apply_chirp(out, pi.q)


def wigner(a, f, g, order=5):
    """``W_a(f, g) = mu(a)(f tensor conj(g))`` on the doubled grid."""
    if f.spec != g.spec:
        raise GridMismatch("f and g live on different grids")
    if f.spec.dims not in (1, 2):
        raise GridMismatch("wigner supports d = 1 or 2")
    return apply_metaplectic(a, tensor(f, g.conj()), order)


# -- short-time Fourier transforms -------------------------------------------

def _shifted(g, x_idx, t_idx, n):
    """``g(t - x)`` on index grids: index ``t - x + n/2``, zero outside."""
    k = t_idx[None, :] - x_idx[:, None] + n // 2
    valid = (k >= 0) & (k < n)
    return np.where(valid, g[np.clip(k, 0, n - 1)], 0.0)


def partial_stft(f, g, k):
    """Short-time Fourier transform in the first ``k`` variables by direct summation.

    ``V^k_g f(x1, x2, w1, w2) = sum_t f(t, x2) conj(g(t - x1, -w2)) exp(-2 pi i t w1) h^k``
    with ``g(t - x)`` taken as zero off the grid.  Output axes are ordered
    ``(x1, x2, w1, w2)``.
    """
    if f.spec != g.spec:
        raise GridMismatch("f and g live on different grids")
    d = f.spec.dims
    if d not in (1, 2):
        raise GridMismatch("partial_stft supports d = 1 or 2")
    if int(k) != k or not 1 <= k <= d:
        raise BadK(f"k must be in 1..{d}")
    spec = f.spec
    n, h = spec.n, spec.h
    idx = np.arange(n)
    x = spec.axis()
    # kernel[t, w] = exp(-2 pi i t w) h
    kern = np.exp(-2j * np.pi * np.outer(x, x)) * h
    fs, gs = f.samples, g.samples
    if d == 1:
        prod = fs[None, :] * _shifted(gs, idx, idx, n).conj()  # [x, t]
        return GridFunction(spec.with_dims(2), prod @ kern)
    if k == 2:
        # V(x1, x2, w1, w2) = sum_{t1,t2} f(t1,t2) conj(g(t1-x1, t2-x2)) e^{-2pi i (t1 w1 + t2 w2)} h^2
        k_idx = idx[None, :] - idx[:, None] + n // 2  # [x, t]
        valid = (k_idx >= 0) & (k_idx < n)
        kc = np.clip(k_idx, 0, n - 1)
        gsh = gs[kc[:, :, None, None], kc[None, None, :, :]]  # [x1, t1, x2, t2]
        gsh = np.where(valid[:, :, None, None] & valid[None, None, :, :], gsh, 0.0)
        prod = fs[None, :, None, :] * gsh.conj()  # [x1, t1, x2, t2]
        out = np.einsum("atbs,tw,sv->abwv", prod, kern, kern, optimize=True)
        return GridFunction(spec.with_dims(4), out)
    # k = 1, d = 2: frozen x2, dualized w2 enters through g(., -w2)
    gneg = _parity(gs, 1)  # gneg[:, j] = g(., -x_j)
    gsh = _shifted_axis0(gneg, n)  # [x1, t, w2]
    prod = fs[None, :, :, None] * gsh.conj()[:, :, None, :]  # [x1, t, x2, w2]
    out = np.einsum("atbv,tw->abwv", prod, kern, optimize=True)
    return GridFunction(spec.with_dims(4), out)


def _shifted_axis0(g2, n):
    idx = np.arange(n)
    k = idx[None, :] - idx[:, None] + n // 2  # [x, t]
    valid = (k >= 0) & (k < n)
    return np.where(valid[:, :, None], g2[np.clip(k, 0, n - 1), :], 0.0)


def stft(f, g):
    """Short-time Fourier transform ``V_g f(x, w) = int f(t) conj(g(t - x)) e^{-2 pi i t w} dt``."""
    return partial_stft(f, g, f.spec.dims)


# -- support measurement -----------------------------------------------------

def support_report(fn, eps=1e-3):
    """Grid proxy for the measure of the support of ``F``.

    Cells with ``|F| > eps * max|F|`` are counted; ``mass_fraction`` is the
    share of ``sum |F|^2`` carried by them.
    """
    if not 0 < eps < 1:
        raise BadParam("eps must lie in (0, 1)")
    mod = np.abs(fn.samples)
    top = float(mod.max(initial=0.0))
    if top == 0.0:
        return SupportReport(float(eps), 0.0, 0.0, 0.0)
    thr = eps * top
    mask = mod > thr
    energy = mod ** 2
    return SupportReport(
        eps=float(eps),
        area=float(np.count_nonzero(mask) * fn.spec.cell),
        mass_fraction=float(energy[mask].sum() / energy.sum()),
        threshold=thr,
    )


# -- counterexamples ---------------------------------------------------------

def witness_build(recipe, f0, g0, a=None, order=5, tol=WITNESS_TOL):
    """Build ``(f, g, W)`` from a witness recipe and compactly supported ``f0, g0``.

    ``f = mu(R_D1)^-1 f0`` and ``g = mu(R_conj(D2))^-1 g0``; then ``|W_a(f, g)|``
    must equal ``|det L|^(-1/2) |f0 tensor conj(g0)|(W^T L^-1 .)``, which is
    checked to relative L2 accuracy ``tol``.
    """
    if not isinstance(recipe, WitnessRecipe):
        raise BadParam("recipe must be a WitnessRecipe")
    if f0.spec != g0.spec:
        raise GridMismatch("f0 and g0 live on different grids")
    if recipe.d != f0.spec.dims:
        raise DimensionMismatch(f"recipe for d={recipe.d} on a {f0.spec.dims}-dimensional grid")
    a = recipe.matrix() if a is None else np.asarray(a, dtype=float)
    f = apply_metaplectic(gen_ru(recipe.delta1.conj().T), f0, order)
    g = apply_metaplectic(gen_ru(recipe.delta2.T), g0, order)
    w = wigner(a, f, g, order)
    expected = apply_dilation(tensor(f0, g0.conj()).abs(), recipe.l @ recipe.w, order)
    err = rel_l2(np.abs(w.samples), np.abs(expected.samples))
    if err > tol:
        raise WitnessMismatch(f"|W| deviates from the predicted modulus by {err:.3e}")
    return f, g, w


# -- output ------------------------------------------------------------------

def write_csv(fn, path):
    """CSV with header ``x1,...,xm,re,im,abs``, one row per cell (``m <= 2``)."""
    m = fn.spec.dims
    if m > 2:
        raise DimensionMismatch("CSV output is for m <= 2; use write_binary")
    coords = [np.broadcast_to(x, fn.spec.shape).ravel() for x in fn.spec.mesh()]
    s = fn.samples.ravel()
    table = np.column_stack(coords + [s.real, s.imag, np.abs(s)])
    header = ",".join([f"x{i + 1}" for i in range(m)] + ["re", "im", "abs"])
    np.savetxt(path, table, delimiter=",", header=header, comments="", fmt="%.17g")


def read_csv(path, spec):
    table = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    m = spec.dims
    return GridFunction(spec, (table[:, m] + 1j * table[:, m + 1]).reshape(spec.shape))


def write_binary(fn, path):
    """Interleaved little-endian float64 ``(re, im)`` pairs plus a JSON sidecar."""
    s = fn.samples.ravel()
    np.column_stack([s.real, s.imag]).astype("<f8").tofile(path)
    with open(f"{path}.json", "w") as fh:
        json.dump(fn.spec.to_json(), fh)


def read_binary(path):
    with open(f"{path}.json") as fh:
        meta = json.load(fh)
    spec = GridSpec(int(meta["dims"]), int(meta["N"]), float(meta["h"]))
    raw = np.fromfile(path, dtype="<f8").reshape(-1, 2)
    return GridFunction(spec, (raw[:, 0] + 1j * raw[:, 1]).reshape(spec.shape))


def write_grid(fn, path):
    if fn.spec.dims <= 2:
        write_csv(fn, path)
    else:
        write_binary(fn, path)
