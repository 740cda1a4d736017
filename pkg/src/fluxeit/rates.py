"""Drive-dressed damping rates of the three-level circuit.

A strong field at omega_0 couples levels |1> and |2> with amplitude
Omega_D = nu |Omega_D| and detuning Delta = w3 - omega_0.  In the dressed
basis the drive enters the environment-induced rates through the generalized
Rabi frequency Omega = sqrt(Delta^2 + 4 |Omega_D|^2) and the mixing angle
tan(theta) = sqrt((Omega-Delta)/(Omega+Delta)).  The four rates gamma_11,
gamma_12, gamma_21, gamma_22 damp and couple the probe-driven coherences
sigma_01 and sigma_02; each is a weighted sum of the bath spectra S and R
evaluated at drive-shifted transition frequencies

    w0(+-) = omega_0 +- Omega,
    w1(+-) = w1 + (Delta +- Omega)/2,
    wp(+-) = w' + (Delta +- Omega)/2,     w' = omega_0 + w1,

with trigonometric weights in theta.  Lamb shifts (the principal-value
companions of these sums) are dropped throughout.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .bath import BathParams, r_function, spectral_density, thermal_frequency
from .current import LoopCurrentMatrix


@dataclass(frozen=True)
class DriveConfig:
    """Drive amplitude/detuning and the derived dressed parameters.

    omega_d_mag  Rabi frequency |Omega_D| in rad/s
    delta        detuning Delta = w3 - omega_0 in rad/s
    phase        drive phase; nu = exp(i*phase), default +1
    """

    omega_d_mag: float
    delta: float = 0.0
    phase: float = 0.0

    def __post_init__(self):
        if self.omega_d_mag < 0:
            raise ValueError(f"|Omega_D| must be >= 0, got {self.omega_d_mag}")

    @property
    def nu(self) -> complex:
        re, im = math.cos(self.phase), math.sin(self.phase)
        if abs(im) < 1e-12:  # snap multiples of pi to the exact +-1 gauge
            return complex(1.0 if re > 0 else -1.0)
        return complex(re, im)

    @property
    def omega_d(self) -> complex:
        return self.nu * self.omega_d_mag

    @property
    def omega_big(self) -> float:
        return math.sqrt(self.delta**2 + 4 * self.omega_d_mag**2)

    @property
    def theta(self) -> float:
        # theta = 0 exactly when the drive is off; otherwise in (0, pi/2)
        if self.omega_d_mag == 0.0:
            return 0.0
        return math.atan(math.sqrt((self.omega_big - self.delta) / (self.omega_big + self.delta)))

    def dressed_energies(self, hbar: float = 1.0) -> tuple[float, float]:
        """Dressed-doublet energies (eps1, eps2); splitting hbar*Omega."""
        return (hbar * (self.delta - self.omega_big) / 2,
                hbar * (self.delta + self.omega_big) / 2)


def dressed_params(delta: float, omega_d_mag: float) -> tuple[float, float, complex]:
    """(Omega, theta, nu) for a drive with real positive amplitude."""
    drive = DriveConfig(omega_d_mag=omega_d_mag, delta=delta)
    return drive.omega_big, drive.theta, drive.nu


@dataclass(frozen=True)
class DampingRates:
    """Damping rates in rad/s; g12/g21 vanish without the drive."""

    g11: float
    g22: float
    g12: float
    g21: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.g11, self.g22, self.g12, self.g21)


RWA_WARN_FRACTION = 0.05


def damping_rates(
    currents: LoopCurrentMatrix,
    freqs: tuple[float, float, float],
    drive: DriveConfig,
    bath: BathParams,
) -> DampingRates:
    """Assemble gamma_11, gamma_22, gamma_12, gamma_21 from the bath spectra.

    ``freqs`` are the bare transition frequencies (w1, w2, w3) in rad/s.
    With the real current gauge and nu = +-1 all four rates are real; the
    imaginary parts are checked and discarded at machine precision.
    """
    w1, w2, w3 = freqs
    if drive.nu.imag != 0.0:
        raise ValueError("damping rates are derived in the real drive gauge; "
                         "use a drive phase that is a multiple of pi")
    if max(drive.omega_d_mag, abs(drive.delta)) > RWA_WARN_FRACTION * min(w1, w3):
        warnings.warn(
            "drive parameters exceed 5% of the transition frequencies; "
            "the rotating-wave treatment is marginal",
            stacklevel=2,
        )
    if thermal_frequency(bath.temperature) > 0.2 * w1:
        warnings.warn(
            "k_B T above 0.2 hbar w1; neglecting thermal populations is marginal",
            stacklevel=2,
        )

    omega_0 = w3 - drive.delta
    omega_p = omega_0 + w1  # w' = w2 - Delta
    big = drive.omega_big
    th = drive.theta
    nu = drive.nu

    sin2, cos2 = math.sin(th) ** 2, math.cos(th) ** 2
    s2t, c2t = math.sin(2 * th), math.cos(2 * th)

    w0_pm = (omega_0 + big, omega_0 - big)
    w1_pm = (w1 + (drive.delta + big) / 2, w1 + (drive.delta - big) / 2)
    wp_pm = (omega_p + (drive.delta + big) / 2, omega_p + (drive.delta - big) / 2)

    def S(w):
        return spectral_density(w, bath)

    def R(w):
        return r_function(w, bath)

    i01 = abs(currents.elements[0, 1]) ** 2
    i02 = abs(currents.elements[0, 2]) ** 2
    i12 = abs(currents.elements[1, 2]) ** 2
    d00, d11, d22 = (currents.elements[l, l] for l in range(3))

    a11 = sin2 * S(w1_pm[0]) + cos2 * S(w1_pm[1])
    a12 = cos2 / 2 * R(-wp_pm[0]) + sin2 / 2 * R(-wp_pm[1])
    a13 = (cos2**2 / 2 * R(-w0_pm[0]) + sin2**2 / 2 * R(-w0_pm[1])
           + s2t**2 / 4 * R(-omega_0))
    a14 = 0.5 * R(0.0)
    a15 = -s2t**2 / 8 * (R(big) + R(-big)) - (1 + c2t**2) / 4 * R(0.0)
    a16 = s2t**2 / 8 * (R(big) + R(-big)) - s2t**2 / 4 * R(0.0)
    g11 = (i01 * a11 + i02 * a12 + i12 * a13
           + (d00 - d11) * d00 * a14 + (d00 - d11) * d11 * a15 + (d00 - d11) * d22 * a16)

    a21 = nu * s2t / 4 * (R(w1_pm[0]) - R(w1_pm[1]))
    a22 = nu * s2t * (-cos2 / 4 * R(-w0_pm[0]) + sin2 / 4 * R(-w0_pm[1]) + c2t / 4 * R(-omega_0))
    a23 = nu * s2t * (-cos2 / 4 * R(big) + sin2 / 4 * R(-big) + c2t / 4 * R(0.0))
    a24 = nu * s2t * (cos2 / 4 * R(big) - sin2 / 4 * R(-big) - c2t / 4 * R(0.0))
    g12 = i01 * a21 + i12 * a22 + (d00 - d11) * d11 * a23 + (d00 - d11) * d22 * a24

    nuc = np.conj(nu)
    b11 = nuc * s2t / 4 * (R(wp_pm[0]) - R(wp_pm[1]))
    b12 = nuc * s2t * (cos2 / 4 * R(w0_pm[0]) - sin2 / 4 * R(w0_pm[1]) - c2t / 4 * R(omega_0))
    b13 = nuc * s2t * (sin2 / 4 * R(big) - cos2 / 4 * R(-big) + c2t / 4 * R(0.0))
    b14 = nuc * s2t * (-sin2 / 4 * R(big) + cos2 / 4 * R(-big) - c2t / 4 * R(0.0))
    g21 = i02 * b11 + i12 * b12 + (d00 - d22) * d11 * b13 + (d00 - d22) * d22 * b14

    b21 = sin2 / 2 * R(-w1_pm[0]) + cos2 / 2 * R(-w1_pm[1])
    b22 = cos2 * S(wp_pm[0]) + sin2 * S(wp_pm[1])
    b23 = (cos2**2 / 2 * R(w0_pm[0]) + sin2**2 / 2 * R(w0_pm[1])
           + s2t**2 / 4 * R(omega_0))
    b24 = 0.5 * R(0.0)
    b25 = s2t**2 / 8 * (R(big) + R(-big)) - s2t**2 / 4 * R(0.0)
    b26 = -s2t**2 / 8 * (R(big) + R(-big)) - (1 + c2t**2) / 4 * R(0.0)
    g22 = (i01 * b21 + i02 * b22 + i12 * b23
           + (d00 - d22) * d00 * b24 + (d00 - d22) * d11 * b25 + (d00 - d22) * d22 * b26)

    return DampingRates(
        g11=float(np.real_if_close(g11, tol=100)),
        g22=float(np.real_if_close(g22, tol=100)),
        g12=float(np.real_if_close(g12, tol=100)),
        g21=float(np.real_if_close(g21, tol=100)),
    )
