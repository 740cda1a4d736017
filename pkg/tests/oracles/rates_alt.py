"""Second, independent transcription of the damping-rate coefficient sums.

Written separately from fluxeit.rates on purpose: the ~40 printed
coefficients are encoded here as data (weight name, spectral function,
frequency slot) and evaluated by a generic reducer, with independently
coded spectral functions (coth via expm1 instead of tanh) and dressing
angles (atan2 instead of atan of a quotient).  Agreement of the two routes
to 1e-12 relative is the decisive check that both transcriptions are
faithful.
"""

from __future__ import annotations

import math

import numpy as np


def coth(x: float) -> float:
    # 1 + 2/(e^{2x} - 1), exact for both signs, saturates to +-1 safely
    with np.errstate(over="ignore"):
        e = np.expm1(2.0 * x)
    if not np.isfinite(e):
        return 1.0
    return 1.0 + 2.0 / e


def chi_imag_alt(w, beta, i_s, omega_c):
    return (2 * math.pi * beta / i_s**2) * w * math.exp(-abs(w) / omega_c)


def s_alt(w, beta, i_s, omega_c, w_thermal):
    if w_thermal == 0.0:
        return abs(chi_imag_alt(w, beta, i_s, omega_c))
    if w == 0.0:
        return 2 * (2 * math.pi * beta / i_s**2) * w_thermal
    return chi_imag_alt(w, beta, i_s, omega_c) * coth(w / (2 * w_thermal))


def r_alt(w, beta, i_s, omega_c, w_thermal):
    if w_thermal == 0.0:
        return 2 * chi_imag_alt(w, beta, i_s, omega_c) if w > 0 else 0.0
    if w == 0.0:
        return 2 * (2 * math.pi * beta / i_s**2) * w_thermal
    return chi_imag_alt(w, beta, i_s, omega_c) * (1.0 + coth(w / (2 * w_thermal)))


# weight factory: maps name -> function of (theta, nu)
_WEIGHTS = {
    "sin2": lambda t, nu: math.sin(t) ** 2,
    "cos2": lambda t, nu: math.cos(t) ** 2,
    "cos2/2": lambda t, nu: math.cos(t) ** 2 / 2,
    "sin2/2": lambda t, nu: math.sin(t) ** 2 / 2,
    "cos4/2": lambda t, nu: math.cos(t) ** 4 / 2,
    "sin4/2": lambda t, nu: math.sin(t) ** 4 / 2,
    "s2t2/4": lambda t, nu: math.sin(2 * t) ** 2 / 4,
    "s2t2/8": lambda t, nu: math.sin(2 * t) ** 2 / 8,
    "-s2t2/8": lambda t, nu: -math.sin(2 * t) ** 2 / 8,
    "-s2t2/4": lambda t, nu: -math.sin(2 * t) ** 2 / 4,
    "half": lambda t, nu: 0.5,
    "-(1+c2t2)/4": lambda t, nu: -(1 + math.cos(2 * t) ** 2) / 4,
    "nu*s2t/4": lambda t, nu: nu * math.sin(2 * t) / 4,
    "-nu*s2t/4": lambda t, nu: -nu * math.sin(2 * t) / 4,
    "nu*s2t*cos2/4": lambda t, nu: nu * math.sin(2 * t) * math.cos(t) ** 2 / 4,
    "-nu*s2t*cos2/4": lambda t, nu: -nu * math.sin(2 * t) * math.cos(t) ** 2 / 4,
    "nu*s2t*sin2/4": lambda t, nu: nu * math.sin(2 * t) * math.sin(t) ** 2 / 4,
    "-nu*s2t*sin2/4": lambda t, nu: -nu * math.sin(2 * t) * math.sin(t) ** 2 / 4,
    "nu*s2t*c2t/4": lambda t, nu: nu * math.sin(2 * t) * math.cos(2 * t) / 4,
    "-nu*s2t*c2t/4": lambda t, nu: -nu * math.sin(2 * t) * math.cos(2 * t) / 4,
}

# coefficient tables: list of (weight name, "S" or "R", frequency slot)
_COEFFS = {
    "a11": [("sin2", "S", "w1+"), ("cos2", "S", "w1-")],
    "a12": [("cos2/2", "R", "-wp+"), ("sin2/2", "R", "-wp-")],
    "a13": [("cos4/2", "R", "-w0+"), ("sin4/2", "R", "-w0-"), ("s2t2/4", "R", "-w0")],
    "a14": [("half", "R", "0")],
    "a15": [("-s2t2/8", "R", "W"), ("-s2t2/8", "R", "-W"), ("-(1+c2t2)/4", "R", "0")],
    "a16": [("s2t2/8", "R", "W"), ("s2t2/8", "R", "-W"), ("-s2t2/4", "R", "0")],
    "a21": [("nu*s2t/4", "R", "w1+"), ("-nu*s2t/4", "R", "w1-")],
    "a22": [("-nu*s2t*cos2/4", "R", "-w0+"), ("nu*s2t*sin2/4", "R", "-w0-"),
            ("nu*s2t*c2t/4", "R", "-w0")],
    "a23": [("-nu*s2t*cos2/4", "R", "W"), ("nu*s2t*sin2/4", "R", "-W"),
            ("nu*s2t*c2t/4", "R", "0")],
    "a24": [("nu*s2t*cos2/4", "R", "W"), ("-nu*s2t*sin2/4", "R", "-W"),
            ("-nu*s2t*c2t/4", "R", "0")],
    "b11": [("nu*s2t/4", "R", "wp+"), ("-nu*s2t/4", "R", "wp-")],
    "b12": [("nu*s2t*cos2/4", "R", "w0+"), ("-nu*s2t*sin2/4", "R", "w0-"),
            ("-nu*s2t*c2t/4", "R", "w0")],
    "b13": [("nu*s2t*sin2/4", "R", "W"), ("-nu*s2t*cos2/4", "R", "-W"),
            ("nu*s2t*c2t/4", "R", "0")],
    "b14": [("-nu*s2t*sin2/4", "R", "W"), ("nu*s2t*cos2/4", "R", "-W"),
            ("-nu*s2t*c2t/4", "R", "0")],
    "b21": [("sin2/2", "R", "-w1+"), ("cos2/2", "R", "-w1-")],
    "b22": [("cos2", "S", "wp+"), ("sin2", "S", "wp-")],
    "b23": [("cos4/2", "R", "w0+"), ("sin4/2", "R", "w0-"), ("s2t2/4", "R", "w0")],
    "b24": [("half", "R", "0")],
    "b25": [("s2t2/8", "R", "W"), ("s2t2/8", "R", "-W"), ("-s2t2/4", "R", "0")],
    "b26": [("-s2t2/8", "R", "W"), ("-s2t2/8", "R", "-W"), ("-(1+c2t2)/4", "R", "0")],
}


def damping_rates_alt(i_elements, freqs, omega_d_mag, delta, beta, i_s, omega_c, w_thermal,
                      nu: float = 1.0):
    """(g11, g22, g12, g21) from the coefficient tables above.

    ``i_elements`` is the real 3x3 current matrix in I_0 units, ``freqs``
    the bare (w1, w2, w3), frequencies in rad/s, temperature already
    converted to the thermal frequency k_B T / hbar.
    """
    w1, _, w3 = freqs
    omega0 = w3 - delta
    wprime = omega0 + w1
    big = math.hypot(delta, 2 * omega_d_mag)
    theta = 0.0 if omega_d_mag == 0.0 else math.atan2(
        math.sqrt(big - delta), math.sqrt(big + delta))

    slots = {
        "w1+": w1 + (delta + big) / 2, "w1-": w1 + (delta - big) / 2,
        "wp+": wprime + (delta + big) / 2, "wp-": wprime + (delta - big) / 2,
        "w0+": omega0 + big, "w0-": omega0 - big, "w0": omega0,
        "W": big, "0": 0.0,
    }
    for name in list(slots):
        if name != "0":
            slots["-" + name] = -slots[name]

    def spectral(kind, slot):
        w = slots[slot]
        if kind == "S":
            return s_alt(w, beta, i_s, omega_c, w_thermal)
        return r_alt(w, beta, i_s, omega_c, w_thermal)

    def coeff(name):
        return sum(_WEIGHTS[wname](theta, nu) * spectral(kind, slot)
                   for wname, kind, slot in _COEFFS[name])

    m = np.asarray(i_elements, dtype=float)
    i01sq, i02sq, i12sq = m[0, 1] ** 2, m[0, 2] ** 2, m[1, 2] ** 2
    d00, d11, d22 = m[0, 0], m[1, 1], m[2, 2]

    g11 = (i01sq * coeff("a11") + i02sq * coeff("a12") + i12sq * coeff("a13")
           + (d00 - d11) * d00 * coeff("a14") + (d00 - d11) * d11 * coeff("a15")
           + (d00 - d11) * d22 * coeff("a16"))
    g12 = (i01sq * coeff("a21") + i12sq * coeff("a22")
           + (d00 - d11) * d11 * coeff("a23") + (d00 - d11) * d22 * coeff("a24"))
    g21 = (i02sq * coeff("b11") + i12sq * coeff("b12")
           + (d00 - d22) * d11 * coeff("b13") + (d00 - d22) * d22 * coeff("b14"))
    g22 = (i01sq * coeff("b21") + i02sq * coeff("b22") + i12sq * coeff("b23")
           + (d00 - d22) * d00 * coeff("b24") + (d00 - d22) * d11 * coeff("b25")
           + (d00 - d22) * d22 * coeff("b26"))
    return g11, g22, g12, g21
