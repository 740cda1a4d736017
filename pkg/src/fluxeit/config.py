"""Flat key-value run configuration.

Format: one or more ``section.key = value`` assignments per line (commas
separate multiple assignments on a line), ``#`` starts a comment.  Grids are
written ``start:stop:npoints`` or as space-separated values.  Unknown keys
and unphysical values are hard errors naming the key and line.  An empty
document yields the reference parameter set: alpha = 0.7, E_J/E_c = 48,
E_J/hbar = 2 pi x 144 GHz, beta = 1e-4, cutoff 100 w_s, T = 25 mK,
|Omega_D|/2 pi = 0.37 MHz, resonant drive.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, asdict

import numpy as np

from .bath import KB_OVER_HBAR
from .circuit import BasisTruncation, CircuitParams
from .errors import ConfigError
from .rates import DriveConfig

MHZ = 2 * math.pi * 1e6
GHZ = 2 * math.pi * 1e9


@dataclass
class RunConfig:
    alpha: float = 0.7
    ej_over_ec: float = 48.0
    ej_ghz: float = 144.0
    f: float = 0.5
    n_p: int = 16
    n_m: int = 16
    beta: float = 1e-4
    cutoff_mult: float = 100.0
    t_mk: float = 25.0
    rabi_mhz: float = 0.37
    detuning_mhz: float = 0.0
    sweep_axis: str | None = None
    sweep_grid: np.ndarray | None = None
    sweep_window: str = "01"
    output_dir: str = "artifacts"

    def circuit_params(self) -> CircuitParams:
        return CircuitParams(alpha=self.alpha, ej_over_ec=self.ej_over_ec,
                             ej_scale=self.ej_ghz * GHZ, f=self.f)

    def truncation(self) -> BasisTruncation:
        return BasisTruncation(n_p=self.n_p, n_m=self.n_m)

    def drive(self) -> DriveConfig:
        return DriveConfig(omega_d_mag=self.rabi_mhz * MHZ, delta=self.detuning_mhz * MHZ)

    def temperature(self) -> float:
        return self.t_mk * 1e-3

    def metadata(self) -> str:
        """Deterministic JSON echo for CSV provenance headers."""
        d = asdict(self)
        d["sweep_grid"] = None if self.sweep_grid is None else [float(x) for x in self.sweep_grid]
        d["kb_over_hbar_rad_per_s_per_K"] = KB_OVER_HBAR
        return json.dumps(d, sort_keys=True, separators=(",", ":"))


_FLOAT_KEYS = {
    "circuit.alpha": ("alpha", lambda v: 0.5 < v < 1.0),
    "circuit.ej_over_ec": ("ej_over_ec", lambda v: v > 0),
    "circuit.ej_GHz": ("ej_ghz", lambda v: v > 0),
    "circuit.f": ("f", lambda v: 0.0 <= v <= 1.0),
    "bath.beta": ("beta", lambda v: v > 0),
    "bath.cutoff_mult": ("cutoff_mult", lambda v: v > 0),
    "bath.T_mK": ("t_mk", lambda v: v >= 0),
    "drive.rabi_MHz": ("rabi_mhz", lambda v: v >= 0),
    "drive.detuning_MHz": ("detuning_mhz", lambda v: True),
}
_INT_KEYS = {
    "circuit.n_p": ("n_p", lambda v: v >= 4),
    "circuit.n_m": ("n_m", lambda v: v >= 4),
}
_STR_KEYS = {
    "sweep.axis": ("sweep_axis", ("f", "T_mK", "rabi_MHz")),
    "sweep.window": ("sweep_window", ("01", "02")),
    "output.dir": ("output_dir", None),
}


def _parse_grid(text: str, key: str, lineno: int) -> np.ndarray:
    text = text.strip()
    try:
        if ":" in text:
            start, stop, n = text.split(":")
            grid = np.linspace(float(start), float(stop), int(n))
        else:
            grid = np.array([float(tok) for tok in text.split()], dtype=float)
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"line {lineno}: cannot parse grid for '{key}': {text!r}") from exc
    if grid.size == 0:
        raise ConfigError(f"line {lineno}: empty grid for '{key}'")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise ConfigError(f"line {lineno}: grid for '{key}' must be strictly increasing")
    return grid


def parse_config(text: str) -> RunConfig:
    cfg = RunConfig()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for item in line.split(","):
            item = item.strip()
            if not item:
                continue
            if "=" not in item:
                raise ConfigError(f"line {lineno}: expected 'key = value', got {item!r}")
            key, value = (part.strip() for part in item.split("=", 1))
            _apply(cfg, key, value, lineno)
    return cfg


def _apply(cfg: RunConfig, key: str, value: str, lineno: int):
    if key in _FLOAT_KEYS:
        attr, valid = _FLOAT_KEYS[key]
        try:
            v = float(value)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: '{key}' needs a number, got {value!r}") from exc
        if not valid(v):
            raise ConfigError(f"line {lineno}: '{key} = {value}' violates its physical range")
        setattr(cfg, attr, v)
    elif key in _INT_KEYS:
        attr, valid = _INT_KEYS[key]
        try:
            v = int(value)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: '{key}' needs an integer, got {value!r}") from exc
        if not valid(v):
            raise ConfigError(f"line {lineno}: '{key} = {value}' violates its allowed range")
        setattr(cfg, attr, v)
    elif key in _STR_KEYS:
        attr, allowed = _STR_KEYS[key]
        if allowed is not None and value not in allowed:
            raise ConfigError(f"line {lineno}: '{key}' must be one of {allowed}, got {value!r}")
        setattr(cfg, attr, value)
    elif key == "sweep.grid":
        cfg.sweep_grid = _parse_grid(value, key, lineno)
    else:
        raise ConfigError(f"line {lineno}: unknown key '{key}'")
