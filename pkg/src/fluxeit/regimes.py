"""EIT versus ATS classification of the probe response.

Two drive-strength thresholds organize the physics in each probe window
(derived for Delta = 0 and g12 = g21 = 0, applied approximately otherwise):

    Omega_W      = |g11 - g22| / 2          weak/strong driving boundary;
                                            the resonance roots collide here
    Omega_M(01)  = g22 sqrt(g22/(g11+2 g22))  window-center curvature flips
    Omega_M(02)  = g11 sqrt(g11/(g22+2 g11))  (maximum <-> minimum regime)

EIT needs overlapping resonances interfering destructively hard enough to
dig a dip: weak driving AND minimum regime, which requires g11 > 2 g22
(window 01) or g22 > 2 g11 (window 02) so that Omega_M < Omega_W.  ATS needs
split resonances far enough apart: strong driving AND minimum regime.  Both
windows can be ATS at once; they can never both be EIT.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rates import DampingRates

BIFURCATION_REL_TOL = 1e-6


def thresholds(rates: DampingRates) -> tuple[float, float, float]:
    """(Omega_W, Omega_M01, Omega_M02) in rad/s."""
    g11, g22 = rates.g11, rates.g22
    if g11 <= 0 or g22 <= 0:
        raise ValueError(f"damping rates must be positive, got g11={g11}, g22={g22}")
    omega_w = abs(g11 - g22) / 2
    omega_m01 = g22 * np.sqrt(g22 / (g11 + 2 * g22))
    omega_m02 = g11 * np.sqrt(g11 / (g22 + 2 * g11))
    return omega_w, float(omega_m01), float(omega_m02)


@dataclass
class RegimeReport:
    window: str  # "01" or "02"
    label: str  # EIT | ATS | NEITHER | BIFURCATION
    omega_w: float
    omega_m: float
    driving_regime: str  # weak | strong
    extremum_regime: str  # maximum | minimum
    approximate: bool  # conditions applied outside their Delta=0, g12=g21=0 derivation


def classify(window: str, rates: DampingRates, omega_d_mag: float, delta: float = 0.0) -> RegimeReport:
    """Label one probe window for a given drive strength."""
    if window not in ("01", "02"):
        raise ValueError(f"window must be '01' or '02', got {window!r}")
    omega_w, omega_m01, omega_m02 = thresholds(rates)
    if window == "01":
        omega_m = omega_m01
        eit_possible = rates.g11 > 2 * rates.g22
    else:
        omega_m = omega_m02
        eit_possible = rates.g22 > 2 * rates.g11

    weak = omega_d_mag < omega_w
    minimum = omega_d_mag > omega_m

    if abs(omega_d_mag - omega_w) < BIFURCATION_REL_TOL * omega_w:
        label = "BIFURCATION"
    elif eit_possible and minimum and weak:
        label = "EIT"
    elif minimum and not weak:
        label = "ATS"
    else:
        label = "NEITHER"

    return RegimeReport(
        window=window,
        label=label,
        omega_w=omega_w,
        omega_m=omega_m,
        driving_regime="weak" if weak else "strong",
        extremum_regime="minimum" if minimum else "maximum",
        approximate=bool(delta != 0.0 or rates.g12 != 0.0 or rates.g21 != 0.0),
    )


@dataclass
class CurvatureCheck:
    omega_d: np.ndarray
    classifier_minimum: np.ndarray  # bool per grid point
    curvature_minimum: np.ndarray
    agree: np.ndarray
    near_threshold: np.ndarray  # within 5% of Omega_M or Omega_W; disagreements expected only here


def verify_against_spectrum(window: str, context, omega_d_grid, band: float = 0.05) -> CurvatureCheck:
    """Compare the classifier's extremum regime with brute-force curvature.

    For every drive strength the rates are recomputed from ``context``
    (a ModelContext), g12/g21 are zeroed and Delta set to 0 to match the
    regime conditions, and the sign of the second difference of Im chi at
    the window center decides numerically between maximum and minimum.
    """
    from .model import rates_at  # local import; model builds on this module's siblings
    from .response import chi01, chi02
    from .rates import DriveConfig
    from dataclasses import replace

    omega_d_grid = np.asarray(omega_d_grid, dtype=float)
    cls_min = np.zeros(omega_d_grid.size, dtype=bool)
    cur_min = np.zeros(omega_d_grid.size, dtype=bool)
    near = np.zeros(omega_d_grid.size, dtype=bool)

    for k, omega_d in enumerate(omega_d_grid):
        rates = rates_at(context, omega_d_mag=float(omega_d), delta=0.0)
        rates = replace(rates, g12=0.0, g21=0.0)
        drive = DriveConfig(omega_d_mag=float(omega_d), delta=0.0)
        report = classify(window, rates, float(omega_d))
        cls_min[k] = report.extremum_regime == "minimum"
        h = 1e-3 * min(rates.g11, rates.g22)
        grid = np.array([-h, 0.0, h])
        chi = chi01(grid, rates, drive, 1.0) if window == "01" else chi02(grid, rates, drive, 1.0)
        second = chi.imag[0] - 2 * chi.imag[1] + chi.imag[2]
        cur_min[k] = second > 0
        near[k] = (abs(omega_d - report.omega_m) < band * report.omega_m
                   or abs(omega_d - report.omega_w) < band * max(report.omega_w, 1e-300))

    return CurvatureCheck(
        omega_d=omega_d_grid,
        classifier_minimum=cls_min,
        curvature_minimum=cur_min,
        agree=cls_min == cur_min,
        near_threshold=near,
    )
