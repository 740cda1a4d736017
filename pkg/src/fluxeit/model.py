"""Assembly of a full parameter point: circuit, currents, bath and rates.

Everything downstream of the circuit diagonalization (rates, susceptibility,
classification, time-domain checks) consumes a ModelContext built here.  The
bath normalization uses two quantities computed once per circuit family and
cached: the reference current I_s = |I_01|(f=0.5) and the cutoff anchor
w_s = (E_2-E_0)/hbar at f = 0.5.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .bath import BathParams
from .circuit import BasisTruncation, CircuitParams, _map_rows, solve_circuit, transition_frequencies
from .current import LoopCurrentMatrix, build_current_operator, current_matrix_elements, reference_current
from .rates import DampingRates, DriveConfig, damping_rates
from .response import ResponsePoint, chi01, chi02

DEFAULT_BETA = 1e-4
DEFAULT_CUTOFF_MULT = 100.0


@lru_cache(maxsize=64)
def cutoff_anchor(alpha: float, ej_over_ec: float, ej_scale: float, trunc: BasisTruncation) -> float:
    """w_s = (E_2 - E_0)/hbar at the optimal point, rad/s."""
    spec = solve_circuit(CircuitParams(alpha, ej_over_ec, ej_scale, 0.5), trunc)
    return transition_frequencies(spec, ej_scale)[1]


@dataclass(frozen=True)
class ModelContext:
    """One fully-assembled parameter point."""

    params: CircuitParams
    trunc: BasisTruncation
    currents: LoopCurrentMatrix
    freqs: tuple[float, float, float]  # (w1, w2, w3) rad/s
    bath: BathParams
    drive: DriveConfig
    rates: DampingRates

    @property
    def omega_0(self) -> float:
        """Drive frequency omega_0 = w3 - Delta."""
        return self.freqs[2] - self.drive.delta

    @property
    def omega_prime(self) -> float:
        """Second probe window center w' = omega_0 + w1 = w2 - Delta."""
        return self.omega_0 + self.freqs[0]


def build_context(
    params: CircuitParams,
    drive: DriveConfig,
    temperature: float,
    beta: float = DEFAULT_BETA,
    cutoff_mult: float = DEFAULT_CUTOFF_MULT,
    trunc: BasisTruncation = BasisTruncation(),
) -> ModelContext:
    spec = solve_circuit(params, trunc)
    currents = current_matrix_elements(spec, build_current_operator(params, trunc))
    freqs = transition_frequencies(spec, params.ej_scale)
    i_s = reference_current(params.alpha, params.ej_over_ec, trunc)
    omega_s = cutoff_anchor(params.alpha, params.ej_over_ec, params.ej_scale, trunc)
    bath = BathParams(beta=beta, omega_c=cutoff_mult * omega_s, i_s=i_s, temperature=temperature)
    rates = damping_rates(currents, freqs, drive, bath)
    return ModelContext(params=params, trunc=trunc, currents=currents,
                        freqs=freqs, bath=bath, drive=drive, rates=rates)


def rates_at(ctx: ModelContext, omega_d_mag: float | None = None,
             delta: float | None = None, temperature: float | None = None) -> DampingRates:
    """Damping rates at the context's circuit point with overridden drive/bath knobs."""
    drive = ctx.drive
    if omega_d_mag is not None or delta is not None:
        drive = DriveConfig(
            omega_d_mag=ctx.drive.omega_d_mag if omega_d_mag is None else omega_d_mag,
            delta=ctx.drive.delta if delta is None else delta,
            phase=ctx.drive.phase,
        )
    bath = ctx.bath if temperature is None else replace(ctx.bath, temperature=temperature)
    return damping_rates(ctx.currents, ctx.freqs, drive, bath)


def with_drive(ctx: ModelContext, omega_d_mag: float | None = None, delta: float | None = None) -> ModelContext:
    drive = DriveConfig(
        omega_d_mag=ctx.drive.omega_d_mag if omega_d_mag is None else omega_d_mag,
        delta=ctx.drive.delta if delta is None else delta,
        phase=ctx.drive.phase,
    )
    return replace(ctx, drive=drive, rates=damping_rates(ctx.currents, ctx.freqs, drive, ctx.bath))


def chi_q(omega_p: float, ctx: ModelContext) -> ResponsePoint:
    """Total probe susceptibility chi_q = chi01 + chi02 at one frequency."""
    d1 = omega_p - ctx.freqs[0]
    d2 = omega_p - ctx.omega_prime
    return ResponsePoint(
        omega_p=omega_p,
        delta1=d1,
        delta2=d2,
        chi01=chi01(d1, ctx.rates, ctx.drive, abs(ctx.currents.i01)),
        chi02=chi02(d2, ctx.rates, ctx.drive, abs(ctx.currents.i02)),
    )


def chi_q_grid(omega_p_grid, ctx: ModelContext) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized (chi01, chi02) over a probe-frequency grid."""
    omega_p_grid = np.asarray(omega_p_grid, dtype=float)
    c1 = chi01(omega_p_grid - ctx.freqs[0], ctx.rates, ctx.drive, abs(ctx.currents.i01))
    c2 = chi02(omega_p_grid - ctx.omega_prime, ctx.rates, ctx.drive, abs(ctx.currents.i02))
    return c1, c2


@dataclass
class RateSweep:
    axis: str
    grid: np.ndarray
    g11: np.ndarray
    g22: np.ndarray
    g12: np.ndarray
    g21: np.ndarray
    ok: np.ndarray
    errors: list[tuple[int, str]]


def sweep_rates(axis: str, grid, ctx: ModelContext, jobs: int = 1) -> RateSweep:
    """Damping rates along one axis: 'f', 'T' (kelvin) or 'omega_d' (rad/s).

    The f axis rebuilds the circuit per point; the other axes reuse the
    context's spectrum and only move the bath or the dressing.
    """
    grid = np.asarray(grid, dtype=float)
    if axis not in ("f", "T", "omega_d"):
        raise ValueError(f"axis must be one of 'f', 'T', 'omega_d', got {axis!r}")
    if axis == "T" and grid.min() < 0:
        raise ValueError("temperatures must be >= 0")
    if axis == "omega_d" and grid.min() < 0:
        raise ValueError("Rabi frequencies must be >= 0")

    out = {k: np.full(grid.size, np.nan) for k in ("g11", "g22", "g12", "g21")}
    ok = np.zeros(grid.size, dtype=bool)
    errors: list[tuple[int, str]] = []

    def row(i):
        x = float(grid[i])
        if axis == "f":
            sub = build_context(replace(ctx.params, f=x), ctx.drive, ctx.bath.temperature,
                                beta=ctx.bath.beta,
                                cutoff_mult=ctx.bath.omega_c / cutoff_anchor(
                                    ctx.params.alpha, ctx.params.ej_over_ec, ctx.params.ej_scale, ctx.trunc),
                                trunc=ctx.trunc)
            return sub.rates.as_tuple()
        if axis == "T":
            return rates_at(ctx, temperature=x).as_tuple()
        return rates_at(ctx, omega_d_mag=x).as_tuple()

    for i, result in _map_rows(row, grid.size, jobs):
        if isinstance(result, Exception):
            errors.append((i, str(result)))
        else:
            out["g11"][i], out["g22"][i], out["g12"][i], out["g21"][i] = result
            ok[i] = True
    return RateSweep(axis=axis, grid=grid, ok=ok, errors=errors, **out)
