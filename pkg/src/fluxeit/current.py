"""Loop-current operator and its gauge-fixed matrix elements.

The circulating current is, in units of I_0 = 2 pi E_J / Phi_0,

    I / I_0 = [alpha/(1+2 alpha)] * [2 cos(phi_p) sin(phi_m) - sin(2 pi f + 2 phi_m)].

Its matrix elements between circuit eigenstates set every coupling in the
problem: drive (I_12), probe (I_01, I_02) and bath (all of them).  The
Hamiltonian is a real operator in the phase representation, so a gauge exists
in which all I_ij are real; we fix it by rotating eigenvector phases.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .circuit import BasisTruncation, CircuitParams, _basis, _map_rows, solve_circuit, Spectrum
from .errors import NumericsError

REALITY_TOL = 1e-8  # residual imaginary part allowed after gauge fixing, in I_0


@dataclass
class LoopCurrentMatrix:
    """Real, symmetric current matrix elements I_ij in units of I_0."""

    elements: np.ndarray  # (n_keep, n_keep)
    gauge_report: list[complex]  # phase applied to each eigenvector

    @property
    def i01(self) -> float:
        return float(self.elements[0, 1])

    @property
    def i02(self) -> float:
        return float(self.elements[0, 2])

    @property
    def i12(self) -> float:
        return float(self.elements[1, 2])

    def diagonal(self) -> np.ndarray:
        return np.diag(self.elements).copy()


def build_current_operator(params: CircuitParams, trunc: BasisTruncation) -> np.ndarray:
    """Charge-basis matrix of the loop-current operator, units of I_0."""
    basis = _basis(trunc.n_p, trunc.n_m)
    c = params.alpha / (1 + 2 * params.alpha)
    op = np.zeros((basis.dim, basis.dim), dtype=complex)
    # 2 cos(phi_p) sin(phi_m): amplitude c/(2i) on the phi_m-raising exponentials,
    # -c/(2i) on the lowering ones, for both phi_p directions
    for rows, cols in basis.p_any_m_up:
        op[rows, cols] += c / 2j
    for rows, cols in basis.p_any_m_down:
        op[rows, cols] += -c / 2j
    # -sin(2 pi f + 2 phi_m)
    phase = np.exp(1j * 2 * np.pi * params.f)
    rows, cols = basis.m_plus2
    op[rows, cols] += -(c / 2j) * phase
    rows, cols = basis.m_minus2
    op[rows, cols] += (c / 2j) * np.conj(phase)
    return op


def current_matrix_elements(spec: Spectrum, current_op: np.ndarray, n_keep: int = 3) -> LoopCurrentMatrix:
    """Gauge-fixed I_ij = <i|I|j> between the lowest ``n_keep`` eigenstates.

    Phases are rotated so consecutive off-diagonal elements are real and
    nonnegative (I_01 >= 0, then I_12 >= 0, ...).  Everything else must then
    come out real on its own; a residual imaginary part above REALITY_TOL
    means the eigenbasis is broken (e.g. degenerate) and raises.
    """
    if n_keep > spec.n_levels:
        raise ValueError(f"n_keep={n_keep} exceeds available levels {spec.n_levels}")
    if current_op.shape[0] != spec.eigenvectors.shape[0]:
        raise ValueError(
            f"basis mismatch: operator dim {current_op.shape[0]} vs "
            f"eigenvector dim {spec.eigenvectors.shape[0]}"
        )
    bad = [l for l in spec.degenerate_pairs if l + 1 < n_keep]
    if bad:
        raise NumericsError(f"levels {bad} are degenerate; eigenvector gauge is undefined")

    vecs = spec.eigenvectors[:, :n_keep]
    mat = vecs.conj().T @ current_op @ vecs
    phases = [1.0 + 0j] * n_keep
    for j in range(1, n_keep):
        # prefer the consecutive element; fall back to any fixed state below
        fixer = None
        if abs(mat[j - 1, j]) > REALITY_TOL:
            fixer = j - 1
        else:
            below = np.abs(mat[:j, j])
            if below.max() > REALITY_TOL:
                fixer = int(np.argmax(below))
        if fixer is None:
            continue  # column couples to nothing fixed yet; phase is irrelevant
        ph = np.exp(-1j * np.angle(mat[fixer, j]))
        phases[j] = ph
        mat[:, j] *= ph
        mat[j, :] *= np.conj(ph)

    residual = float(np.max(np.abs(mat.imag)))
    if residual > REALITY_TOL:
        i, j = np.unravel_index(np.argmax(np.abs(mat.imag)), mat.shape)
        raise NumericsError(
            f"current element I[{i},{j}] kept imaginary part {residual:.3e} I0 after gauge fixing"
        )
    return LoopCurrentMatrix(elements=mat.real.copy(), gauge_report=phases)


def loop_currents(params: CircuitParams, trunc: BasisTruncation, n_keep: int = 3) -> LoopCurrentMatrix:
    """Spectrum + operator + gauge fixing in one step."""
    spec = solve_circuit(params, trunc, n_levels=max(n_keep, 6))  # 6 shares the cache with level sweeps
    return current_matrix_elements(spec, build_current_operator(params, trunc), n_keep)


@lru_cache(maxsize=64)
def reference_current(alpha: float, ej_over_ec: float, trunc: BasisTruncation) -> float:
    """Bath normalization current I_s = |I_01| at the optimal point f = 0.5."""
    params = CircuitParams(alpha=alpha, ej_over_ec=ej_over_ec, f=0.5)
    return abs(loop_currents(params, trunc).i01)


@dataclass
class CurrentSweep:
    f: np.ndarray
    abs_i01: np.ndarray
    abs_i02: np.ndarray
    abs_i12: np.ndarray
    i00: np.ndarray
    i11: np.ndarray
    i22: np.ndarray
    ok: np.ndarray
    errors: list[tuple[int, str]]


def sweep_currents(
    base: CircuitParams,
    f_grid,
    trunc: BasisTruncation,
    jobs: int = 1,
) -> CurrentSweep:
    """Loop-current matrix elements versus reduced flux."""
    f_grid = np.asarray(f_grid, dtype=float)
    if f_grid.size == 0:
        raise ValueError("f_grid is empty")
    if f_grid.min() < 0.4 or f_grid.max() > 0.6:
        raise ValueError("f_grid must lie within [0.4, 0.6]")

    cols = {name: np.full(f_grid.size, np.nan) for name in
            ("abs_i01", "abs_i02", "abs_i12", "i00", "i11", "i22")}
    ok = np.zeros(f_grid.size, dtype=bool)
    errors: list[tuple[int, str]] = []

    def row(i):
        cur = loop_currents(replace(base, f=float(f_grid[i])), trunc)
        return (abs(cur.i01), abs(cur.i02), abs(cur.i12),
                cur.elements[0, 0], cur.elements[1, 1], cur.elements[2, 2])

    for i, result in _map_rows(row, f_grid.size, jobs):
        if isinstance(result, Exception):
            errors.append((i, str(result)))
        else:
            for name, value in zip(cols, result):
                cols[name][i] = value
            ok[i] = True
    return CurrentSweep(f=f_grid, ok=ok, errors=errors, **cols)
