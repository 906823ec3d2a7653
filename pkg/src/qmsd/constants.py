"""Physical constants, unit conversions and characteristic scales.

Internal unit system is SI throughout. User-facing constructors accept
atomic mass units, kelvin, picometres and femtoseconds and convert once
at the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class ValidationError(ValueError):
    """A physical parameter failed validation."""


@dataclass(frozen=True)
class PhysicalConstants:
    """2019 SI defining constants (exact, not configurable)."""

    k_B: float = 1.380649e-23       # J/K
    h: float = 6.62607015e-34       # J s
    amu: float = 1.66053906660e-27  # kg

    @property
    def hbar(self) -> float:
        return self.h / (2.0 * math.pi)


CONST = PhysicalConstants()

# unit conversions (SI <-> user-facing units)
U_TO_KG = CONST.amu
PM_TO_M = 1e-12
FS_TO_S = 1e-15
ANGSTROM_TO_M = 1e-10
J_TO_MEV = 1e3 / 1.602176634e-19


def _require_positive(name: str, value) -> None:
    if not value > 0:
        raise ValidationError(f"{name} must be positive, got {value!r}")


@dataclass(frozen=True)
class PhysicalSystem:
    """A free particle on a periodic super-cell, all fields in SI units."""

    mass: float          # kg
    temperature: float   # K
    lattice_a: float     # m
    n_cells: int
    dimensionality: int = 1

    def __post_init__(self):
        _require_positive("mass", self.mass)
        _require_positive("temperature", self.temperature)
        _require_positive("lattice_a", self.lattice_a)
        if not (isinstance(self.n_cells, int) and self.n_cells >= 1):
            raise ValidationError(f"n_cells must be an integer >= 1, got {self.n_cells!r}")
        if self.dimensionality not in (1, 2, 3):
            raise ValidationError(f"dimensionality must be 1, 2 or 3, got {self.dimensionality!r}")

    @property
    def L(self) -> float:
        """Super-cell length L = n_cells * lattice_a (m)."""
        return self.n_cells * self.lattice_a

    @classmethod
    def from_user_units(cls, mass_u, temperature_K, lattice_pm, n_cells,
                        dimensionality=1) -> "PhysicalSystem":
        return cls(
            mass=mass_u * U_TO_KG,
            temperature=temperature_K,
            lattice_a=lattice_pm * PM_TO_M,
            n_cells=n_cells,
            dimensionality=dimensionality,
        )


@dataclass(frozen=True)
class CharacteristicScales:
    """Derived time, length and velocity scales of a thermal free particle."""

    beta: float      # 1/J
    t_b: float       # s, thermal time hbar*beta
    t_c: float       # s, collision time L*sqrt(m*beta)
    v_T: float       # m/s, thermal speed
    lambda_T: float  # m, thermal de Broglie length
    D_q: float       # m^2/s, hbar/2m
    Q_approx: float  # dimensionless, continuum partition function


def derive_scales(sys: PhysicalSystem) -> CharacteristicScales:
    """Derive all characteristic scales from a physical system."""
    hbar = CONST.hbar
    beta = 1.0 / (CONST.k_B * sys.temperature)
    t_b = hbar * beta
    t_c = sys.L * math.sqrt(sys.mass * beta)
    v_T = 1.0 / math.sqrt(beta * sys.mass)
    lambda_T = math.sqrt(hbar**2 * beta / (2.0 * math.pi * sys.mass))
    D_q = hbar / (2.0 * sys.mass)
    Q_approx = sys.L * math.sqrt(sys.mass / (2.0 * math.pi * beta * hbar**2))
    return CharacteristicScales(
        beta=beta, t_b=t_b, t_c=t_c, v_T=v_T,
        lambda_T=lambda_T, D_q=D_q, Q_approx=Q_approx,
    )
