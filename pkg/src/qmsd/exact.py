"""Exact coherent double-sum MSD on the truncated basis, and the
decohered plateau constant obtained by direct summation."""

from __future__ import annotations

import numpy as np

from .backend import backend_name
from .basis import EigenBasis
from .curves import MsdCurve, validate_grid
from .kernels import BLOCK, blocked_sum, msd_reduce, pair_arrays


def msd_exact(basis: EigenBasis, Q: float, t: float,
              weight_floor: float = 1e-18) -> float:
    """Coherent MSD at a single time by the folded pair sum (m^2).

    The double sum over n != j is symmetric under n <-> j, so ordered
    pairs n < j are computed once and doubled.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    wprod, half_omega = pair_arrays(basis, weight_floor)
    s = msd_reduce(wprod, half_omega, np.array([t]))
    return float(8.0 / Q**2 * s[0])


def msd_exact_curve(basis: EigenBasis, Q: float, grid,
                    weight_floor: float = 1e-18) -> MsdCurve:
    """Coherent MSD over a time grid (pair reduction parallel per point)."""
    times = validate_grid(grid)
    wprod, half_omega = pair_arrays(basis, weight_floor)
    values = 8.0 / Q**2 * msd_reduce(wprod, half_omega, times)
    return MsdCurve(
        times=times,
        values=values,
        method="exact-sum",
        params={
            "L": basis.L,
            "K": basis.K,
            "beta": basis.beta,
            "mass": basis.mass,
            "weight_floor": weight_floor,
            "reduction_block": BLOCK,
            "backend": backend_name(),
        },
    )


def breve_sum(basis: EigenBasis, Q: float,
              weight_floor: float = 1e-18) -> float:
    """Decohered plateau constant by direct summation (m^2).

    Equals the coherent sum with every sin^2 factor replaced by 1/2.
    """
    wprod, _ = pair_arrays(basis, weight_floor)
    return float(4.0 / Q**2 * blocked_sum(wprod))
