"""Probe-field susceptibility of the driven three-level circuit.

A weak probe couples |0>-|1> and |0>-|2| through the loop current; the
linear response near the two transitions is

    chi_01(w) = a01 (d1 - Delta + i g22) / D1(d1),   d1 = w - w1,
    chi_02(w) = a02 (d2 + i g11)        / D1(d2),   d2 = w - w',

with a0i = |I_0i|^2, w' = omega_0 + w1, and the shared denominator

    D1(d) = -(d + i g11)(d - Delta + i g22) + (i g12 - W_D)(i g21 - W_D*).

chi is carried in units of I_0^2 / hbar per (rad/s): multiply by I_0^2/hbar
to restore SI response of current to probe flux.  Only the corotating branch
(w > 0 near the transitions) is kept; anti-rotating and three-wave-mixing
terms are dropped.

Each chi splits into two Lorentzian-like resonances at the complex roots
delta_+- of D1 = 0; the split is the basis of the EIT/ATS discussion in
`regimes`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericsError
from .rates import DampingRates, DriveConfig

DEGENERATE_ROOT_TOL = 1e-12


def _denominator(delta, rates: DampingRates, drive: DriveConfig):
    omega_d = drive.omega_d
    cross = (1j * rates.g12 - omega_d) * (1j * rates.g21 - np.conj(omega_d))
    return -(delta + 1j * rates.g11) * (delta - drive.delta + 1j * rates.g22) + cross


def chi01(delta1, rates: DampingRates, drive: DriveConfig, i01_abs: float):
    """Susceptibility of the |0>-|1> window versus detuning d1 = w - w1."""
    delta1 = np.asarray(delta1, dtype=float)
    out = i01_abs**2 * (delta1 - drive.delta + 1j * rates.g22) / _denominator(delta1, rates, drive)
    return out if out.ndim else complex(out)


def chi02(delta2, rates: DampingRates, drive: DriveConfig, i02_abs: float):
    """Susceptibility of the |0>-|2> window versus detuning d2 = w - w'."""
    delta2 = np.asarray(delta2, dtype=float)
    out = i02_abs**2 * (delta2 + 1j * rates.g11) / _denominator(delta2, rates, drive)
    return out if out.ndim else complex(out)


@dataclass
class ResponsePoint:
    """chi at one probe frequency; chi_q = chi01 + chi02 by construction."""

    omega_p: float
    delta1: float
    delta2: float
    chi01: complex
    chi02: complex

    @property
    def chi_q(self) -> complex:
        return self.chi01 + self.chi02


def resonance_roots(rates: DampingRates, drive: DriveConfig) -> tuple[complex, complex]:
    """Complex roots delta_+- of D1(delta) = 0.

    Ordered by descending real part, ties broken by descending imaginary
    part.  For stable rates both roots sit in the lower half plane.
    """
    # D1 = -d^2 - b d + c  with b = i(g11+g22) - Delta
    b = 1j * (rates.g11 + rates.g22) - drive.delta
    omega_d = drive.omega_d
    cross = (1j * rates.g12 - omega_d) * (1j * rates.g21 - np.conj(omega_d))
    c = cross - 1j * rates.g11 * (1j * rates.g22 - drive.delta)
    disc = np.sqrt(b * b + 4 * c + 0j)
    r1 = complex((-b + disc) / 2)
    r2 = complex((-b - disc) / 2)
    plus, minus = sorted((r1, r2), key=lambda z: (z.real, z.imag), reverse=True)
    return plus, minus


@dataclass
class ResonancePair:
    """Partial-fraction split chi = R_+ + R_- over the roots of D1."""

    window: str  # "01" or "02"
    delta_plus: complex
    delta_minus: complex
    amp_plus: complex  # residue numerator weights: R_+(d) = amp_plus / (d - delta_plus)
    amp_minus: complex
    regime_tag: str  # "real-split" | "imaginary-split"

    def resonance_plus(self, delta):
        return self.amp_plus / (np.asarray(delta, dtype=complex) - self.delta_plus)

    def resonance_minus(self, delta):
        return self.amp_minus / (np.asarray(delta, dtype=complex) - self.delta_minus)

    def total(self, delta):
        return self.resonance_plus(delta) + self.resonance_minus(delta)


def decompose(window: str, rates: DampingRates, drive: DriveConfig, coupling_abs: float = 1.0) -> ResonancePair:
    """Two-resonance decomposition of chi01 (window="01") or chi02 ("02").

    ``coupling_abs`` is |I_01| or |I_02|; with the default 1.0 the resonances
    are per unit coupling.  Raises at the bifurcation point where the two
    roots collide and the partial-fraction split does not exist.
    """
    if window not in ("01", "02"):
        raise ValueError(f"window must be '01' or '02', got {window!r}")
    plus, minus = resonance_roots(rates, drive)
    scale = max(abs(plus), abs(minus), rates.g11, rates.g22, drive.omega_d_mag, 1e-300)
    if abs(plus - minus) < DEGENERATE_ROOT_TOL * scale:
        raise NumericsError(
            "resonance roots are degenerate (bifurcation point |Omega_D| = Omega_W); "
            "the two-resonance decomposition is invalid here"
        )
    alpha = coupling_abs**2
    if window == "01":
        num_plus = plus - drive.delta + 1j * rates.g22
        num_minus = minus - drive.delta + 1j * rates.g22
    else:
        num_plus = plus + 1j * rates.g11
        num_minus = minus + 1j * rates.g11
    # chi = alpha * num(d) / D1(d) and D1(d) = -(d - plus)(d - minus)
    amp_plus = alpha * num_plus / (minus - plus)
    amp_minus = alpha * num_minus / (plus - minus)
    split = plus - minus
    tag = "real-split" if abs(split.real) >= abs(split.imag) else "imaginary-split"
    return ResonancePair(
        window=window,
        delta_plus=plus,
        delta_minus=minus,
        amp_plus=complex(amp_plus),
        amp_minus=complex(amp_minus),
        regime_tag=tag,
    )


def green_functions(omega, rates: DampingRates, drive: DriveConfig):
    """Fourier-domain Green functions (G11, G12, G21, G22) of the coherences.

    Same denominator as the susceptibilities; the 2x2 matrix [[G11, G12],
    [G21, G22]] equals i K / D with K the coherence drift matrix, so it can
    be checked against direct inversion of K.
    """
    omega = np.asarray(omega, dtype=float)
    den = _denominator(omega, rates, drive)
    omega_d = drive.omega_d
    g11 = 1j * (omega + 1j * rates.g11) / den
    g12 = 1j * (1j * rates.g12 - omega_d) / den
    g21 = 1j * (1j * rates.g21 - np.conj(omega_d)) / den
    g22 = 1j * (omega - drive.delta + 1j * rates.g22) / den
    if omega.ndim:
        return g11, g12, g21, g22
    return complex(g11), complex(g12), complex(g21), complex(g22)
