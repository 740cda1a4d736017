"""Spectrum of the three-junction flux qubit in a truncated charge basis.

The circuit has two identical junctions (Josephson energy E_J, capacitance
C_J) and one smaller junction (alpha*E_J, alpha*C_J) in a loop threaded by a
bias flux f = Phi_e/Phi_0.  In the phase variables phi_p = (phi_1+phi_2)/2,
phi_m = (phi_2-phi_1)/2 the Hamiltonian is

    H/E_J = 2 Ec' n_p^2 + 2 Ec' n_m^2/(1+2 alpha) + (2+alpha)
            - cos(phi_p)cos(phi_m)*2 - alpha cos(2 pi f + 2 phi_m)

with Ec' = E_c/E_J and n_p, n_m the conjugate charges.  Charge quantization
lives on the junction phases phi_1, phi_2, so admissible plane waves
exp(i n_p phi_p + i n_m phi_m) have n_p + n_m even (integer charges
n_1 = (n_p-n_m)/2 and n_2 = (n_p+n_m)/2).  Dropping that restriction doubles
the Hilbert space with a spurious sector that decouples from every physical
operator; all matrices here are built on the even-sum lattice only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import NumericsError

# Gaps below this (in E_J) are treated as degenerate: eigenvector gauges are
# then ill-defined and downstream consumers must be told.
DEGENERACY_TOL = 1e-10


@dataclass(frozen=True)
class CircuitParams:
    """Physical instance of the flux qubit circuit.

    alpha       ratio of the small junction to the large ones, 0.5 < alpha < 1
    ej_over_ec  E_J/E_c
    ej_scale    E_J/hbar in rad/s (sets absolute frequency units)
    f           reduced bias flux Phi_e/Phi_0
    """

    alpha: float = 0.7
    ej_over_ec: float = 48.0
    ej_scale: float = 2 * math.pi * 144e9
    f: float = 0.5

    def __post_init__(self):
        if not 0.5 < self.alpha < 1.0:
            raise ValueError(f"alpha must be in (0.5, 1), got {self.alpha}")
        if self.ej_over_ec <= 0:
            raise ValueError(f"ej_over_ec must be positive, got {self.ej_over_ec}")
        if self.ej_scale <= 0:
            raise ValueError(f"ej_scale must be positive, got {self.ej_scale}")
        if not 0.0 <= self.f <= 1.0:
            raise ValueError(f"reduced flux must be in [0, 1], got {self.f}")


@dataclass(frozen=True)
class BasisTruncation:
    """Plane-wave cutoffs: indices run over -n_p..n_p and -n_m..n_m."""

    n_p: int = 16
    n_m: int = 16

    def __post_init__(self):
        if self.n_p < 4 or self.n_m < 4:
            raise ValueError(f"truncation too small: n_p={self.n_p}, n_m={self.n_m} (need >= 4)")

    @property
    def dim(self) -> int:
        return _basis(self.n_p, self.n_m).dim


@dataclass
class Spectrum:
    """Lowest eigenpairs of the circuit Hamiltonian, energies in E_J."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # (dim, n_levels), columns are eigenstates
    n_levels: int
    degenerate_pairs: list[int] = field(default_factory=list)  # l with E_{l+1}-E_l below tol


class _Basis:
    """Even-sum charge lattice and precomputed coupling index pairs."""

    def __init__(self, n_p: int, n_m: int):
        states = [
            (a, b)
            for a in range(-n_p, n_p + 1)
            for b in range(-n_m, n_m + 1)
            if (a + b) % 2 == 0
        ]
        index = {s: i for i, s in enumerate(states)}
        self.n_p, self.n_m = n_p, n_m
        self.states = np.array(states)
        self.dim = len(states)

        def pairs(da, db):
            rows, cols = [], []
            for (a, b), i in index.items():
                j = index.get((a + da, b + db))
                if j is not None:
                    rows.append(j)
                    cols.append(i)
            return np.array(rows, dtype=np.intp), np.array(cols, dtype=np.intp)

        # cos(phi_p)cos(phi_m): the four exponentials exp(+-i phi_p +- i phi_m)
        self.coscos = [pairs(sa, sb) for sa in (1, -1) for sb in (1, -1)]
        # exp(+-2 i phi_m) for the alpha junction
        self.m_plus2 = pairs(0, 2)
        self.m_minus2 = pairs(0, -2)
        # exp(+-i phi_p) exp(+-i phi_m) split by the phi_m direction, for the
        # current operator where the two phi_m directions carry opposite sign
        self.p_any_m_up = [pairs(sa, 1) for sa in (1, -1)]
        self.p_any_m_down = [pairs(sa, -1) for sa in (1, -1)]


@lru_cache(maxsize=16)
def _basis(n_p: int, n_m: int) -> _Basis:
    return _Basis(n_p, n_m)


def build_hamiltonian(params: CircuitParams, trunc: BasisTruncation) -> np.ndarray:
    """Dense Hermitian circuit Hamiltonian in units of E_J."""
    basis = _basis(trunc.n_p, trunc.n_m)
    if basis.dim < 9:
        raise ValueError(f"basis dimension {basis.dim} < 9 is too small")
    alpha = params.alpha
    ec = 1.0 / params.ej_over_ec
    a = basis.states[:, 0].astype(float)
    b = basis.states[:, 1].astype(float)

    H = np.zeros((basis.dim, basis.dim), dtype=complex)
    diag = 2 * ec * a**2 + 2 * ec * b**2 / (1 + 2 * alpha) + (2 + alpha)
    H[np.arange(basis.dim), np.arange(basis.dim)] = diag
    for rows, cols in basis.coscos:
        H[rows, cols] += -0.5
    phase = np.exp(1j * 2 * np.pi * params.f)
    rows, cols = basis.m_plus2
    H[rows, cols] += -(alpha / 2) * phase
    rows, cols = basis.m_minus2
    H[rows, cols] += -(alpha / 2) * np.conj(phase)
    return H


def solve_spectrum(H: np.ndarray, n_levels: int = 6) -> Spectrum:
    """Lowest ``n_levels`` eigenpairs of a Hermitian matrix, ascending."""
    scale = max(1.0, float(np.max(np.abs(H))))
    defect = float(np.max(np.abs(H - H.conj().T)))
    if defect > 1e-12 * scale:
        raise ValueError(f"matrix is not Hermitian: max |H - H^dag| = {defect:.3e}")
    if n_levels < 1 or n_levels > H.shape[0]:
        raise ValueError(f"n_levels={n_levels} out of range for dim {H.shape[0]}")
    try:
        evals, evecs = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails here
        raise NumericsError(f"eigensolver failed on {H.shape[0]}-dim matrix: {exc}") from exc
    gaps = np.diff(evals[:n_levels])
    degenerate = [int(l) for l in np.nonzero(gaps < DEGENERACY_TOL)[0]]
    return Spectrum(
        eigenvalues=evals[:n_levels].copy(),
        eigenvectors=evecs[:, :n_levels].copy(),
        n_levels=n_levels,
        degenerate_pairs=degenerate,
    )


def solve_circuit(params: CircuitParams, trunc: BasisTruncation, n_levels: int = 6) -> Spectrum:
    spec = _solve_circuit_cached(params, trunc, n_levels)
    # hand out copies so callers cannot mutate the cache
    return Spectrum(
        eigenvalues=spec.eigenvalues.copy(),
        eigenvectors=spec.eigenvectors.copy(),
        n_levels=spec.n_levels,
        degenerate_pairs=list(spec.degenerate_pairs),
    )


@lru_cache(maxsize=512)
def _solve_circuit_cached(params: CircuitParams, trunc: BasisTruncation, n_levels: int) -> Spectrum:
    return solve_spectrum(build_hamiltonian(params, trunc), n_levels)


def transition_frequencies(spec: Spectrum, ej_scale: float) -> tuple[float, float, float]:
    """Angular frequencies (w1, w2, w3) = (E1-E0, E2-E0, E2-E1)/hbar in rad/s."""
    if spec.n_levels < 3:
        raise ValueError("need at least three levels for transition frequencies")
    e0, e1, e2 = spec.eigenvalues[:3]
    w1 = (e1 - e0) * ej_scale
    w2 = (e2 - e0) * ej_scale
    return (w1, w2, w2 - w1)  # w3 as w2 - w1 keeps the defining identity exact


@dataclass
class LevelSweep:
    f: np.ndarray
    energies: np.ndarray  # (len(f), n_levels), NaN rows on failure
    ok: np.ndarray
    errors: list[tuple[int, str]]


def sweep_levels(
    base: CircuitParams,
    f_grid,
    trunc: BasisTruncation,
    n_levels: int = 6,
    jobs: int = 1,
) -> LevelSweep:
    """Energy levels versus reduced flux; rows are independent."""
    f_grid = np.asarray(f_grid, dtype=float)
    if f_grid.size == 0:
        raise ValueError("f_grid is empty")
    if f_grid.min() < 0.4 or f_grid.max() > 0.6:
        raise ValueError("f_grid must lie within [0.4, 0.6]")

    energies = np.full((f_grid.size, n_levels), np.nan)
    ok = np.zeros(f_grid.size, dtype=bool)
    errors: list[tuple[int, str]] = []

    def row(i):
        spec = solve_circuit(replace(base, f=float(f_grid[i])), trunc, n_levels)
        return spec.eigenvalues

    for i, result in _map_rows(row, f_grid.size, jobs):
        if isinstance(result, Exception):
            errors.append((i, str(result)))
        else:
            energies[i] = result
            ok[i] = True
    return LevelSweep(f=f_grid, energies=energies, ok=ok, errors=errors)


def _map_rows(fn, n, jobs):
    """Run fn(i) for i in range(n), catching per-row failures."""

    def guarded(i):
        try:
            return fn(i)
        except Exception as exc:  # deliberate: one bad row must not kill a sweep
            return exc

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            yield from enumerate(pool.map(guarded, range(n)))
    else:
        yield from enumerate(map(guarded, range(n)))
