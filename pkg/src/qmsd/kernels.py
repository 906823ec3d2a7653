"""Hot O(K^2) reduction kernels, in numba and pure-numpy twins.

Both backends use a fixed-block reduction (BLOCK pairs per partial sum,
blocks combined in index order), so results are reproducible run to run
and independent of thread count. The active twin is chosen per call via
qmsd.backend.
"""

from __future__ import annotations

import numpy as np

from .backend import use_numba
from .constants import CONST

BLOCK = 4096

try:
    from numba import njit, prange
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f
        return wrap

    prange = range


# ---------------------------------------------------------------------------
# pair data: weights and transition frequencies over ordered pairs n < j
# ---------------------------------------------------------------------------

def pair_arrays(basis, weight_floor: float = 1e-18):
    """Per-pair data for the coherent double sum.

    Returns (wprod, half_omega) over ordered index pairs n < j of the
    basis, keeping only states with Boltzmann weight >= weight_floor
    (dropped terms are below double precision in the total).

    wprod = w_n w_j |x_nj|^2  (m^2), half_omega = (E_n - E_j)/(2 hbar).
    """
    keep = basis.w >= weight_floor
    q = basis.q[keep]
    E = basis.E[keep]
    w = basis.w[keep]
    i, j = np.triu_indices(q.size, k=1)
    dq = q[i] - q[j]
    wprod = w[i] * w[j] / (dq * dq)
    half_omega = (E[i] - E[j]) / (2.0 * CONST.hbar)
    return wprod, half_omega


# ---------------------------------------------------------------------------
# coherent MSD reduction: sum_p wprod_p * sin^2(half_omega_p * t)
# ---------------------------------------------------------------------------

@njit(cache=True, parallel=True)
def _msd_reduce_numba(wprod, half_omega, times):  # pragma: no cover - jitted
    nt = times.size
    n = wprod.size
    out = np.empty(nt)
    nblocks = (n + BLOCK - 1) // BLOCK
    for it in prange(nt):
        t = times[it]
        total = 0.0
        for b in range(nblocks):
            lo = b * BLOCK
            hi = min(lo + BLOCK, n)
            acc = 0.0
            for p in range(lo, hi):
                s = np.sin(half_omega[p] * t)
                acc += wprod[p] * s * s
            total += acc
        out[it] = total
    return out


def _msd_reduce_numpy(wprod, half_omega, times):
    nt = times.size
    n = wprod.size
    out = np.empty(nt)
    nblocks = (n + BLOCK - 1) // BLOCK
    for it in range(nt):
        t = times[it]
        total = 0.0
        for b in range(nblocks):
            lo = b * BLOCK
            hi = min(lo + BLOCK, n)
            s = np.sin(half_omega[lo:hi] * t)
            total += float(np.sum(wprod[lo:hi] * s * s))
        out[it] = total
    return out


def msd_reduce(wprod, half_omega, times) -> np.ndarray:
    """sum_p wprod_p sin^2(half_omega_p t) for each t, backend-dispatched."""
    wprod = np.ascontiguousarray(wprod, dtype=np.float64)
    half_omega = np.ascontiguousarray(half_omega, dtype=np.float64)
    times = np.ascontiguousarray(np.atleast_1d(times), dtype=np.float64)
    if use_numba() and _HAVE_NUMBA:
        return _msd_reduce_numba(wprod, half_omega, times)
    return _msd_reduce_numpy(wprod, half_omega, times)


def blocked_sum(values) -> float:
    """Fixed-block deterministic sum (same reduction contract as above)."""
    values = np.asarray(values, dtype=np.float64)
    n = values.size
    total = 0.0
    for lo in range(0, n, BLOCK):
        total += float(np.sum(values[lo:lo + BLOCK]))
    return total


# ---------------------------------------------------------------------------
# ensemble position expectation: x(t) = pref * v(t)^T A u(t) per member
# ---------------------------------------------------------------------------

def antisym_coupling_matrix(K: int) -> np.ndarray:
    """A[n, j] = (-1)^(n-j) / (n - j) off the diagonal, 0 on it."""
    idx = np.arange(K)
    d = idx[:, None] - idx[None, :]
    with np.errstate(divide="ignore"):
        A = np.where(d % 2 == 0, 1.0, -1.0) / np.where(d == 0, np.inf, d)
    np.fill_diagonal(A, 0.0)
    return A


@njit(cache=True, parallel=True)
def _positions_numba(wt, thetas, eom, times, A, pref):  # pragma: no cover
    m = thetas.shape[0]
    K = wt.size
    nt = times.size
    out = np.empty((m, nt))
    for im in prange(m):
        u = np.empty(K)
        v = np.empty(K)
        for it in range(nt):
            t = times[it]
            for k in range(K):
                phi = thetas[im, k] - eom[k] * t
                u[k] = wt[k] * np.cos(phi)
                v[k] = wt[k] * np.sin(phi)
            acc = 0.0
            for n in range(K):
                row = 0.0
                for j in range(K):
                    row += A[n, j] * u[j]
                acc += v[n] * row
            out[im, it] = pref * acc
    return out


def _positions_numpy(wt, thetas, eom, times, A, pref):
    m = thetas.shape[0]
    nt = times.size
    out = np.empty((m, nt))
    for it in range(nt):
        phi = thetas - eom[None, :] * times[it]
        u = wt[None, :] * np.cos(phi)
        v = wt[None, :] * np.sin(phi)
        out[:, it] = pref * np.einsum("mk,mk->m", v, u @ A.T)
    return out


def ensemble_positions(wt, thetas, eom, times, A, pref) -> np.ndarray:
    """Position expectation values, shape (members, times).

    wt: e^(-beta E/2) amplitudes; thetas: random phases per member;
    eom: E/hbar; A: antisymmetric coupling matrix; pref: L/(pi Q).
    """
    wt = np.ascontiguousarray(wt, dtype=np.float64)
    thetas = np.ascontiguousarray(np.atleast_2d(thetas), dtype=np.float64)
    eom = np.ascontiguousarray(eom, dtype=np.float64)
    times = np.ascontiguousarray(np.atleast_1d(times), dtype=np.float64)
    A = np.ascontiguousarray(A, dtype=np.float64)
    if use_numba() and _HAVE_NUMBA:
        return _positions_numba(wt, thetas, eom, times, A, float(pref))
    return _positions_numpy(wt, thetas, eom, times, A, float(pref))
