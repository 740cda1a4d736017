"""Linear microwave response of a driven three-level flux qubit.

Submodules follow the physics pipeline: `circuit` (spectrum) -> `current`
(loop-current matrix elements) -> `bath` (environment spectra) -> `rates`
(drive-dressed damping) -> `response` (probe susceptibility and resonance
decomposition) -> `regimes` (EIT/ATS classification), with `model` bundling
a parameter point, `timedomain` providing an independent ODE cross-check,
and `config`/`cli` the file and command-line surfaces.
"""

__version__ = "0.1.0"

from .circuit import BasisTruncation, CircuitParams, Spectrum, build_hamiltonian, solve_spectrum, sweep_levels, transition_frequencies
from .current import LoopCurrentMatrix, build_current_operator, current_matrix_elements, loop_currents, reference_current, sweep_currents
from .bath import BathParams, KB_OVER_HBAR, chi_imag, r_function, spectral_density, thermal_frequency
from .rates import DampingRates, DriveConfig, damping_rates, dressed_params
from .response import ResonancePair, ResponsePoint, chi01, chi02, decompose, green_functions, resonance_roots
from .regimes import RegimeReport, classify, thresholds, verify_against_spectrum
from .model import ModelContext, build_context, chi_q, chi_q_grid, rates_at, sweep_rates, with_drive
from .timedomain import CoherenceTrajectory, ProbeConfig, extract_susceptibility, integrate_coherences, susceptibility_from_timedomain
from .errors import ConfigError, NumericsError
