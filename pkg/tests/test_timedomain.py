import math

import numpy as np
import pytest

from fluxeit import DampingRates, DriveConfig, ProbeConfig, integrate_coherences, extract_susceptibility, resonance_roots, susceptibility_from_timedomain
from fluxeit.errors import NumericsError
from fluxeit.model import build_context, chi_q, with_drive
from fluxeit.timedomain import default_probe

MHZ = 2 * math.pi * 1e6


class TestProbeConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            ProbeConfig(amplitude=0.0, omega_p=1e9, duration=1e-6)
        with pytest.raises(ValueError):
            ProbeConfig(amplitude=1.0, omega_p=1e9, duration=-1e-6)
        with pytest.raises(ValueError):
            ProbeConfig(amplitude=1.0, omega_p=1e9, duration=1e-6, settle_fraction=1.0)

    def test_default_probe_is_deep_linear(self, ctx_fig5):
        probe = default_probe(ctx_fig5, ctx_fig5.freqs[0])
        gmin = min(ctx_fig5.rates.g11, ctx_fig5.rates.g22)
        assert probe.amplitude == pytest.approx(1e-3 * gmin)
        assert probe.duration >= 10.0 / gmin


class TestDecayAndStability:
    def test_homogeneous_modes_damped(self, ctx_fig6):
        # zero probe: coherences decay because both poles sit below the axis
        plus, minus = resonance_roots(ctx_fig6.rates, ctx_fig6.drive)
        assert plus.imag < 0 and minus.imag < 0

    def test_undamped_system_rejected(self, ctx_fig5):
        broken = with_drive(ctx_fig5)  # copy
        object.__setattr__(broken, "rates", DampingRates(g11=-1e5, g22=1e5, g12=0.0, g21=0.0))
        probe = ProbeConfig(amplitude=1.0, omega_p=ctx_fig5.freqs[0], duration=1e-6)
        with pytest.raises(NumericsError, match="not damped"):
            integrate_coherences(broken, probe)


class TestSteadyState:
    def test_undriven_resonant_amplitude(self, params_optimal):
        # without the strong drive the resonantly probed coherence saturates
        # at amplitude eps |I01| / g11
        ctx = build_context(params_optimal, DriveConfig(omega_d_mag=0.0), 0.025)
        probe = default_probe(ctx, ctx.freqs[0])
        traj = integrate_coherences(ctx, probe)
        tail = np.abs(traj.sigma01[int(0.9 * traj.t.size):])
        expected = probe.amplitude * ctx.currents.i01 / ctx.rates.g11
        assert tail.mean() == pytest.approx(expected, rel=1e-3)

    def test_bounded_coherences(self, ctx_fig6):
        probe = default_probe(ctx_fig6, ctx_fig6.freqs[0] + 40 * MHZ)
        traj = integrate_coherences(ctx_fig6, probe)
        assert np.max(np.abs(traj.sigma01)) <= 1.0
        assert np.max(np.abs(traj.sigma02)) <= 1.0

    def test_too_short_run_raises(self, ctx_fig5):
        gmin = min(ctx_fig5.rates.g11, ctx_fig5.rates.g22)
        probe = ProbeConfig(amplitude=1e-3 * gmin, omega_p=ctx_fig5.freqs[0],
                            duration=2.0 / gmin)
        traj = integrate_coherences(ctx_fig5, probe)
        with pytest.raises(NumericsError, match="steady"):
            extract_susceptibility(traj, ctx_fig5.currents)


class TestAgainstAnalytic:
    def test_weak_driving_window01(self, ctx_fig5):
        omega_p = ctx_fig5.freqs[0]
        estimate = susceptibility_from_timedomain(ctx_fig5, omega_p)
        analytic = chi_q(omega_p, ctx_fig5)
        assert abs(estimate.chi_q - analytic.chi_q) / abs(analytic.chi_q) < 1e-2
        assert estimate.residual < 1e-2

    def test_strong_driving_peak(self, ctx_fig6):
        omega_p = ctx_fig6.freqs[0] + 2 * ctx_fig6.drive.omega_d_mag / 2
        estimate = susceptibility_from_timedomain(ctx_fig6, omega_p)
        analytic = chi_q(omega_p, ctx_fig6)
        assert abs(estimate.chi_q - analytic.chi_q) / abs(analytic.chi_q) < 1e-2

    def test_second_window(self, ctx_fig7):
        omega_p = ctx_fig7.omega_prime + 1.0 * MHZ
        estimate = susceptibility_from_timedomain(ctx_fig7, omega_p)
        analytic = chi_q(omega_p, ctx_fig7)
        assert abs(estimate.chi_q - analytic.chi_q) / abs(analytic.chi_q) < 1e-2
        # the probe source for the far window was dropped, so chi01 ~ 0 there
        assert abs(estimate.chi01) < 1e-2 * abs(estimate.chi02)

    def test_linearity_in_probe_amplitude(self, ctx_fig5):
        omega_p = ctx_fig5.freqs[0] + 1.0 * MHZ
        base = default_probe(ctx_fig5, omega_p)
        results = []
        for scale in (1.0, 0.5, 100.0):
            probe = ProbeConfig(amplitude=base.amplitude * scale, omega_p=omega_p,
                                duration=base.duration)
            traj = integrate_coherences(ctx_fig5, probe)
            results.append(extract_susceptibility(traj, ctx_fig5.currents).chi_q)
        assert abs(results[1] - results[0]) / abs(results[0]) < 1e-3
        assert abs(results[2] - results[0]) / abs(results[0]) < 1e-3
