import math

import pytest

from fluxeit import BasisTruncation, CircuitParams, DriveConfig, build_context

MHZ = 2 * math.pi * 1e6


@pytest.fixture(scope="session")
def trunc():
    return BasisTruncation()


@pytest.fixture(scope="session")
def params_optimal():
    return CircuitParams(f=0.5)


@pytest.fixture(scope="session")
def params_offset():
    return CircuitParams(f=0.525)


@pytest.fixture(scope="session")
def ctx_fig5(params_optimal):
    """f = 0.5, T = 25 mK, |Omega_D|/2pi = 0.37 MHz, resonant drive."""
    return build_context(params_optimal, DriveConfig(omega_d_mag=0.37 * MHZ), 0.025)


@pytest.fixture(scope="session")
def ctx_fig6(params_optimal):
    """f = 0.5, T = 25 mK, |Omega_D|/2pi = 40 MHz, resonant drive."""
    return build_context(params_optimal, DriveConfig(omega_d_mag=40 * MHZ), 0.025)


@pytest.fixture(scope="session")
def ctx_fig7(params_offset):
    """f = 0.525, T = 25 mK, |Omega_D|/2pi = 1.4 MHz, resonant drive."""
    return build_context(params_offset, DriveConfig(omega_d_mag=1.4 * MHZ), 0.025)


@pytest.fixture(scope="session")
def ctx_fig8(params_offset):
    """f = 0.525, T = 25 mK, |Omega_D|/2pi = 40 MHz, resonant drive."""
    return build_context(params_offset, DriveConfig(omega_d_mag=40 * MHZ), 0.025)
