"""Ohmic environment spectral functions.

The bath sees the circuit through the loop current, with dissipative response

    chi''(w) = eta * w * exp(-|w|/w_c),      eta = 2 pi beta / I_s^2,

where beta is the dimensionless coupling and I_s the reference current
|I_01| at f = 0.5 (so currents can be carried in units of I_0 throughout).
The fluctuation-dissipation theorem gives the symmetrized noise

    S(w) = chi''(w) coth(hbar w / 2 k_B T)

and the damping-rate formulas consume chi'', S and the one-sided combination

    R(w) = chi''(w) [1 + coth(hbar w / 2 k_B T)].

All w=0 values are analytic limits (chi''*coth -> 2 eta k_B T / hbar) and
T=0 is an exact branch (coth -> sign), never a division by zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Pinned once for reproducibility: k_B/hbar in rad/s per kelvin.
KB_OVER_HBAR = 2 * math.pi * 20.836619e9


def thermal_frequency(temperature: float) -> float:
    """k_B T / hbar in rad/s."""
    return KB_OVER_HBAR * temperature


@dataclass(frozen=True)
class BathParams:
    """Ohmic bath with exponential cutoff.

    beta         dimensionless coupling, beta = eta I_s^2 / (2 pi)
    omega_c      cutoff angular frequency (rad/s)
    i_s          reference current in units of I_0 (|I_01| at f = 0.5)
    temperature  kelvin
    """

    beta: float
    omega_c: float
    i_s: float
    temperature: float

    def __post_init__(self):
        if self.beta <= 0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if self.omega_c <= 0:
            raise ValueError(f"omega_c must be positive, got {self.omega_c}")
        if self.i_s <= 0:
            raise ValueError(f"i_s must be positive, got {self.i_s}")
        if self.temperature < 0:
            raise ValueError(f"temperature must be >= 0, got {self.temperature}")

    @property
    def eta(self) -> float:
        return 2 * math.pi * self.beta / self.i_s**2


def _as_array(omega):
    scalar = np.ndim(omega) == 0
    return np.atleast_1d(np.asarray(omega, dtype=float)), scalar


def _ret(out, scalar):
    return float(out[0]) if scalar else out


def chi_imag(omega, bath: BathParams):
    """Dissipative bath response chi''(w); odd in w, units rad/s per I_0^2."""
    omega, scalar = _as_array(omega)
    out = bath.eta * omega * np.exp(-np.abs(omega) / bath.omega_c)
    return _ret(out, scalar)


def spectral_density(omega, bath: BathParams):
    """Symmetrized noise spectrum S(w) = chi''(w) coth(hbar w / 2 k_B T)."""
    omega, scalar = _as_array(omega)
    chi = bath.eta * omega * np.exp(-np.abs(omega) / bath.omega_c)
    if bath.temperature == 0.0:
        return _ret(np.abs(chi), scalar)
    w_t = thermal_frequency(bath.temperature)
    out = np.full_like(chi, 2 * bath.eta * w_t)  # analytic w -> 0 limit
    nz = omega != 0.0
    out[nz] = chi[nz] / np.tanh(omega[nz] / (2 * w_t))
    return _ret(out, scalar)


def r_function(omega, bath: BathParams):
    """One-sided spectrum R(w) = chi''(w) [1 + coth(hbar w / 2 k_B T)] >= 0."""
    omega, scalar = _as_array(omega)
    chi = bath.eta * omega * np.exp(-np.abs(omega) / bath.omega_c)
    if bath.temperature == 0.0:
        return _ret(np.where(omega > 0.0, 2 * chi, 0.0), scalar)
    w_t = thermal_frequency(bath.temperature)
    out = np.full_like(chi, 2 * bath.eta * w_t)  # R(0) = S(0)
    nz = omega != 0.0
    out[nz] = chi[nz] * (1.0 + 1.0 / np.tanh(omega[nz] / (2 * w_t)))
    return _ret(out, scalar)
