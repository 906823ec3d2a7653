"""Ideal-gas scattering observables: self pair-correlation function,
dynamic structure factor, intermediate scattering function and its phase."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import ValidationError
from .ideal import complex_squared_length

SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class ScatteringParams:
    v_T: float  # m/s
    D_q: float  # m^2/s
    q: float    # 1/m, momentum transfer wavenumber

    def __post_init__(self):
        if not self.v_T > 0:
            raise ValidationError("v_T must be positive")
        if not self.D_q > 0:
            raise ValidationError("D_q must be positive")


def pair_correlation_self(p: ScatteringParams, x, t: float):
    """Self-part of the pair correlation function, a complex Gaussian
    with squared width v_T^2 t^2 - 2i D_q t (1/m).

    t = 0 is rejected: the limit is a Dirac delta, not representable.
    """
    if t <= 0:
        raise ValidationError("t must be positive (t = 0 is a distributional limit)")
    delta2 = complex_squared_length(p.v_T, p.D_q, t)
    x = np.asarray(x, dtype=float)
    # principal sqrt: Re delta2 > 0 for t > 0, so Gs decays at large |x|
    out = np.exp(-x * x / (2.0 * delta2)) / np.sqrt(2.0 * math.pi * delta2)
    return out if out.ndim else complex(out)


def dsf(p: ScatteringParams, omega):
    """Dynamic structure factor S(q, omega) (s): a Gaussian in omega
    centered at the recoil shift D_q q^2, of width v_T |q|."""
    if p.q == 0:
        raise ValidationError("q must be nonzero for the DSF")
    omega = np.asarray(omega, dtype=float)
    var = p.v_T**2 * p.q**2
    out = np.exp(-((omega - p.D_q * p.q**2) ** 2) / (2.0 * var)) / np.sqrt(2.0 * math.pi * var)
    return out if out.ndim else float(out)


def isf(p: ScatteringParams, t):
    """Intermediate scattering function I(q, t) = exp(-delta2 q^2/4)/sqrt(2 pi).

    Amplitude decays quadratically in t; the phase carries D_q."""
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ValidationError("t must be nonnegative")
    delta2 = p.v_T**2 * t**2 - 2j * p.D_q * t
    out = np.exp(-delta2 * p.q**2 / 4.0) / SQRT_2PI
    return out if out.ndim else complex(out)


def isf_phase(p: ScatteringParams, t):
    """Unwrapped ISF phase D_q t q^2 / 2 (radians), linear in t."""
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ValidationError("t must be nonnegative")
    out = p.D_q * t * p.q**2 / 2.0
    return out if out.ndim else float(out)
