import math

import numpy as np
import pytest

from fluxeit import BathParams, KB_OVER_HBAR, chi_imag, r_function, spectral_density, thermal_frequency

from oracles.frozen import BATH_POINT

OMEGA_S = 1.42528098192414e11  # (E2-E0)/hbar at f = 0.5 for the reference circuit
I_S = 0.56170958603420384


def make_bath(temperature):
    return BathParams(beta=1e-4, omega_c=100 * OMEGA_S, i_s=I_S, temperature=temperature)


class TestChiImag:
    def test_zero_at_zero(self):
        assert chi_imag(0.0, make_bath(0.025)) == 0.0

    def test_odd(self):
        bath = make_bath(0.025)
        w = np.linspace(-3e11, 3e11, 41)
        assert np.max(np.abs(chi_imag(w, bath) + chi_imag(-w, bath))) == 0.0

    def test_cutoff_value(self):
        bath = make_bath(0.025)
        # eta * w_c * e^{-1} with eta = 2 pi beta / I_s^2
        expected = (2 * math.pi * 1e-4 / I_S**2) * bath.omega_c * math.exp(-1)
        assert chi_imag(bath.omega_c, bath) == pytest.approx(expected, rel=1e-14)

    def test_high_precision_point(self):
        assert chi_imag(2 * math.pi * 1e9, make_bath(0.025)) == pytest.approx(
            BATH_POINT["chi_imag"], rel=1e-12)


class TestSpectralDensity:
    def test_zero_temperature_is_abs_chi(self):
        bath = make_bath(0.0)
        w = np.linspace(-2e11, 2e11, 31)
        assert np.array_equal(spectral_density(w, bath), np.abs(chi_imag(w, bath)))

    def test_static_limit(self):
        bath = make_bath(0.025)
        expected = 2 * bath.eta * thermal_frequency(0.025)
        assert spectral_density(0.0, bath) == pytest.approx(expected, rel=1e-14)

    def test_high_precision_point(self):
        assert spectral_density(2 * math.pi * 1e9, make_bath(0.025)) == pytest.approx(
            BATH_POINT["spectral_density"], rel=1e-12)

    def test_positive(self):
        bath = make_bath(0.05)
        w = np.linspace(-5e11, 5e11, 101)
        assert np.all(spectral_density(w, bath) >= 0)


class TestRFunction:
    def test_zero_temperature_branches(self):
        bath = make_bath(0.0)
        assert r_function(-1e10, bath) == 0.0
        assert r_function(1e10, bath) == pytest.approx(2 * chi_imag(1e10, bath), rel=1e-14)
        assert r_function(0.0, bath) == 0.0

    def test_high_precision_point(self):
        assert r_function(2 * math.pi * 1e9, make_bath(0.025)) == pytest.approx(
            BATH_POINT["r_function"], rel=1e-12)

    def test_detailed_balance(self):
        bath = make_bath(0.025)
        w_t = thermal_frequency(0.025)
        for w in (1e9, 3.7e9, 2.2e10):
            ratio = r_function(w, bath) / r_function(-w, bath)
            assert ratio == pytest.approx(math.exp(w / w_t), rel=1e-10)

    def test_nonnegative(self):
        for temperature in (0.0, 0.01, 0.05):
            bath = make_bath(temperature)
            w = np.linspace(-5e11, 5e11, 101)
            assert np.all(r_function(w, bath) >= 0)


class TestIdentities:
    @pytest.mark.parametrize("temperature", [0.0, 0.013, 0.025, 0.05])
    def test_r_difference_is_twice_chi(self, temperature):
        bath = make_bath(temperature)
        w = np.concatenate([[0.0], np.geomspace(1e5, 5e11, 40)])
        w = np.concatenate([-w[::-1], w])
        lhs = r_function(w, bath) - r_function(-w, bath)
        assert np.max(np.abs(lhs - 2 * chi_imag(w, bath))) < 1e-12 * np.max(np.abs(lhs) + 1)

    @pytest.mark.parametrize("temperature", [0.0, 0.025, 0.05])
    def test_s_is_symmetric_r_average(self, temperature):
        bath = make_bath(temperature)
        w = np.concatenate([[0.0], np.geomspace(1e5, 5e11, 40)])
        lhs = 0.5 * (r_function(w, bath) + r_function(-w, bath))
        rhs = spectral_density(w, bath)
        assert np.max(np.abs(lhs - rhs)) <= 1e-12 * np.max(rhs)

    def test_continuity_at_zero(self):
        # near w = 0 the implementation must follow the analytic expansion
        # (R has exact slope eta there, so comparison is against the series,
        # not against the w = 0 value itself)
        bath = make_bath(0.025)
        w_t = thermal_frequency(0.025)
        for eps in (1e-8 * OMEGA_S, -1e-8 * OMEGA_S):
            x = eps / (2 * w_t)
            cutoff = math.exp(-abs(eps) / bath.omega_c)
            s_series = 2 * bath.eta * w_t * (1 + x**2 / 3) * cutoff
            r_series = s_series + bath.eta * eps * cutoff
            assert spectral_density(eps, bath) == pytest.approx(s_series, rel=1e-10)
            assert r_function(eps, bath) == pytest.approx(r_series, rel=1e-10)
        assert spectral_density(0.0, bath) == pytest.approx(2 * bath.eta * w_t, rel=1e-14)
        assert r_function(0.0, bath) == pytest.approx(2 * bath.eta * w_t, rel=1e-14)


def test_parameter_validation():
    with pytest.raises(ValueError):
        BathParams(beta=0.0, omega_c=1e12, i_s=0.5, temperature=0.025)
    with pytest.raises(ValueError):
        BathParams(beta=1e-4, omega_c=-1.0, i_s=0.5, temperature=0.025)
    with pytest.raises(ValueError):
        BathParams(beta=1e-4, omega_c=1e12, i_s=0.5, temperature=-0.01)


def test_pinned_thermal_constant():
    assert KB_OVER_HBAR == pytest.approx(2 * math.pi * 20.836619e9, rel=0)
    assert thermal_frequency(0.025) == pytest.approx(0.025 * KB_OVER_HBAR, rel=0)
