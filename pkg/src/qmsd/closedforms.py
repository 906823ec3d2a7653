"""Closed analytical formulas: the J and I special functions, the
closed-form plateau, and the velocity-averaged collision model."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import CONST, CharacteristicScales, PhysicalSystem, ValidationError

SQRT_PI = math.sqrt(math.pi)
SQRT_2PI = math.sqrt(2.0 * math.pi)
J_AT_ZERO = math.sqrt(2.0) * math.pi / 12.0


def erf(x: float) -> float:
    """Error function (odd; erf(0)=0, erf(inf)=1), accurate to < 1e-15."""
    return math.erf(x)


def J(y: float) -> float:
    """Plateau shape function, continuous at 0 with J(0) = sqrt(2) pi / 12,
    decreasing to 0 as y -> infinity.

    J(y) = (sqrt(2) pi / 12) erf(1/sqrt(2y))
         + (2 sqrt(pi)/3) sqrt(y) ((1 - e^(-1/2y)) y - (3 - e^(-1/2y))/4)
    """
    if y < 0:
        raise ValidationError(f"y must be nonnegative, got {y!r}")
    if y == 0.0:
        return J_AT_ZERO
    u = 1.0 / math.sqrt(2.0 * y)
    if u < 0.1:
        # the two branches cancel to O(u^3) at large y; use the
        # subtracted series in u = 1/sqrt(2y)
        u2 = u * u
        poly = u2 / 72.0 - u2 * u2 / 240.0 + u2**3 / 1120.0 - u2**4 / 6480.0
        return SQRT_2PI * u * poly
    em = -math.expm1(-1.0 / (2.0 * y))  # 1 - e^(-1/2y), no cancellation
    e = 1.0 - em
    return (J_AT_ZERO * math.erf(u)
            + (2.0 * SQRT_PI / 3.0) * math.sqrt(y) * (em * y - (3.0 - e) / 4.0))


def I_ab(a: float, b: float) -> float:
    """I(a, b) = sqrt(pi) (sqrt(a+b) - sqrt(b)), cancellation-safe for
    a << b."""
    if a < 0:
        raise ValidationError(f"a must be nonnegative, got {a!r}")
    if not b > 0:
        raise ValidationError(f"b must be positive, got {b!r}")
    return SQRT_PI * a / (math.sqrt(a + b) + math.sqrt(b))


def breve_closed(sys: PhysicalSystem, scales: CharacteristicScales) -> float:
    """Closed-form decohered plateau (m^2):
    L hbar sqrt(2 beta / (pi m)) J(hbar^2 beta / (2 m L^2))."""
    hbar = CONST.hbar
    L = sys.L
    beta = scales.beta
    y = hbar**2 * beta / (2.0 * sys.mass * L**2)
    return L * hbar * math.sqrt(2.0 * beta / (math.pi * sys.mass)) * J(y)


@dataclass(frozen=True)
class CollisionModelParams:
    alpha: float  # dimensionless, > 0
    L: float      # m
    v_T: float    # m/s
    t_b: float    # s

    def __post_init__(self):
        for name in ("alpha", "L", "v_T", "t_b"):
            if not getattr(self, name) > 0:
                raise ValidationError(f"{name} must be positive")


def msd_collision_model(p: CollisionModelParams, t: float) -> float:
    """Velocity-averaged MSD of the collision model (m^2).

    An erf-weighted blend of the free (ideal) MSD and the decohered
    plateau: particles of speed v move freely until alpha L / v, then
    a collision pins the MSD at the plateau value; the blend averages
    over the one-sided Maxwell-Boltzmann speed distribution.
    """
    if t < 0:
        raise ValidationError("t must be nonnegative")
    if t == 0.0:
        return 0.0
    g = math.erf(p.alpha * p.L / (math.sqrt(2.0) * p.v_T * t))
    x = t / p.t_b
    free = p.v_T**2 * p.t_b**2 * (x * x / (math.sqrt(x * x + 1.0) + 1.0))
    plateau = (p.v_T * p.t_b * p.L * math.sqrt(2.0 / math.pi)
               * J((p.v_T * p.t_b / p.L) ** 2 / 2.0))
    return g * free + (1.0 - g) * plateau


def maxwell_boltzmann_pdf(v, v_T: float):
    """One-sided Maxwell-Boltzmann speed density (s/m):
    sqrt(2/pi) exp(-(v/v_T)^2 / 2) / v_T."""
    v = np.asarray(v, dtype=float)
    if np.any(v < 0):
        raise ValidationError("v must be nonnegative")
    out = math.sqrt(2.0 / math.pi) * np.exp(-((v / v_T) ** 2) / 2.0) / v_T
    return out if out.ndim else float(out)
