"""Command-line driver: sweeps, classification, figure recipes, CSV output.

Every artifact is a CSV whose first line is a ``#``-prefixed JSON echo of the
resolved configuration (plus the pinned k_B/hbar constant) and whose floats
are written with 17 significant digits, so identical configs give
byte-identical files.  Susceptibilities are emitted per 2*pi*GHz in units of
I_0^2/hbar; rates and frequency offsets as ordinary (non-angular) MHz.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import __version__
from .config import GHZ, MHZ, RunConfig, parse_config
from .circuit import CircuitParams, sweep_levels
from .current import sweep_currents
from .model import ModelContext, build_context, chi_q_grid, rates_at, sweep_rates, with_drive
from .rates import DriveConfig
from .regimes import classify
from .response import decompose
from .timedomain import susceptibility_from_timedomain

CHI_UNIT = GHZ  # internal chi is per rad/s; report per 2*pi*GHz


def _fmt(x) -> str:
    return "%.17g" % float(x)


def write_csv(path: Path, meta: str, columns: list[str], rows) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# {meta}\n")
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(x) for x in row) + "\n")


def default_f_grid(cfg: RunConfig) -> np.ndarray:
    if cfg.sweep_grid is not None and cfg.sweep_axis in (None, "f"):
        return cfg.sweep_grid
    return np.linspace(0.45, 0.55, 201)


def cmd_spectrum(cfg: RunConfig, out: Path, jobs: int) -> list[Path]:
    table = sweep_levels(cfg.circuit_params(), default_f_grid(cfg), cfg.truncation(), jobs=jobs)
    _require_rows(table.errors, table.ok)
    rows = [
        [table.f[i], *table.energies[i],
         (table.energies[i, 1] - table.energies[i, 0]) * cfg.ej_ghz,
         (table.energies[i, 2] - table.energies[i, 0]) * cfg.ej_ghz,
         (table.energies[i, 2] - table.energies[i, 1]) * cfg.ej_ghz]
        for i in range(table.f.size)
    ]
    path = out / "spectrum.csv"
    write_csv(path, cfg.metadata(),
              ["f", "e0_EJ", "e1_EJ", "e2_EJ", "e3_EJ", "e4_EJ", "e5_EJ",
               "w1_GHz", "w2_GHz", "w3_GHz"], rows)
    return [path]


def cmd_currents(cfg: RunConfig, out: Path, jobs: int) -> list[Path]:
    table = sweep_currents(cfg.circuit_params(), default_f_grid(cfg), cfg.truncation(), jobs=jobs)
    _require_rows(table.errors, table.ok)
    rows = [
        [table.f[i], table.abs_i01[i], table.abs_i02[i], table.abs_i12[i],
         table.i00[i], table.i11[i], table.i22[i]]
        for i in range(table.f.size)
    ]
    path = out / "currents.csv"
    write_csv(path, cfg.metadata(),
              ["f", "abs_i01_I0", "abs_i02_I0", "abs_i12_I0", "i00_I0", "i11_I0", "i22_I0"], rows)
    return [path]


def cmd_rates(cfg: RunConfig, out: Path, jobs: int) -> list[Path]:
    ctx = _context(cfg)
    axis = cfg.sweep_axis or "f"
    if axis == "f":
        grid, native = default_f_grid(cfg), default_f_grid(cfg)
        sweep = sweep_rates("f", native, ctx, jobs=jobs)
    elif axis == "T_mK":
        grid = cfg.sweep_grid if cfg.sweep_grid is not None else np.linspace(0.0, 100.0, 101)
        sweep = sweep_rates("T", grid * 1e-3, ctx, jobs=jobs)
    else:  # rabi_MHz
        grid = cfg.sweep_grid if cfg.sweep_grid is not None else np.linspace(0.0, 50.0, 201)
        sweep = sweep_rates("omega_d", grid * MHZ, ctx, jobs=jobs)
    _require_rows(sweep.errors, sweep.ok)
    rows = [
        [grid[i], sweep.g11[i] / MHZ, sweep.g22[i] / MHZ, sweep.g12[i] / MHZ, sweep.g21[i] / MHZ]
        for i in range(np.size(grid))
    ]
    path = out / "rates.csv"
    write_csv(path, cfg.metadata(),
              [axis, "g11_MHz", "g22_MHz", "g12_MHz", "g21_MHz"], rows)
    return [path]


def _probe_offsets(ctx: ModelContext) -> np.ndarray:
    """Default probe window: generous multiple of the splitting or linewidth."""
    half = 4 * max(2 * ctx.drive.omega_d_mag, ctx.rates.g11 + ctx.rates.g22)
    return np.linspace(-half, half, 2001)


def cmd_susceptibility(cfg: RunConfig, out: Path, jobs: int) -> list[Path]:
    ctx = _context(cfg)
    center = ctx.freqs[0] if cfg.sweep_window == "01" else ctx.omega_prime
    if cfg.sweep_grid is not None and cfg.sweep_axis is None:
        offsets = cfg.sweep_grid * MHZ
    else:
        offsets = _probe_offsets(ctx)
    omega_p = center + offsets
    c1, c2 = chi_q_grid(omega_p, ctx)
    pair = decompose(cfg.sweep_window, ctx.rates, ctx.drive,
                     abs(ctx.currents.i01 if cfg.sweep_window == "01" else ctx.currents.i02))
    delta = offsets  # detuning from the window's own center
    rp, rm = pair.resonance_plus(delta), pair.resonance_minus(delta)
    rows = [
        [offsets[i] / MHZ, omega_p[i] / GHZ,
         (c1[i] + c2[i]).real * CHI_UNIT, (c1[i] + c2[i]).imag * CHI_UNIT,
         c1[i].real * CHI_UNIT, c1[i].imag * CHI_UNIT,
         c2[i].real * CHI_UNIT, c2[i].imag * CHI_UNIT,
         rp[i].real * CHI_UNIT, rp[i].imag * CHI_UNIT,
         rm[i].real * CHI_UNIT, rm[i].imag * CHI_UNIT]
        for i in range(offsets.size)
    ]
    path = out / "susceptibility.csv"
    write_csv(path, cfg.metadata(),
              ["offset_MHz", "omega_p_GHz",
               "re_chi_q", "im_chi_q", "re_chi01", "im_chi01", "re_chi02", "im_chi02",
               "re_R_plus", "im_R_plus", "re_R_minus", "im_R_minus"], rows)
    return [path]


def cmd_classify(cfg: RunConfig, out: Path, jobs: int) -> list[Path]:
    ctx = _context(cfg)
    reports = [classify(w, ctx.rates, ctx.drive.omega_d_mag, ctx.drive.delta) for w in ("01", "02")]
    payload = {
        "config": json.loads(cfg.metadata()),
        "rates_MHz": {"g11": ctx.rates.g11 / MHZ, "g22": ctx.rates.g22 / MHZ,
                      "g12": ctx.rates.g12 / MHZ, "g21": ctx.rates.g21 / MHZ},
        "windows": [
            {"window": r.window, "label": r.label,
             "omega_w_MHz": r.omega_w / MHZ, "omega_m_MHz": r.omega_m / MHZ,
             "driving_regime": r.driving_regime, "extremum_regime": r.extremum_regime,
             "approximate": r.approximate}
            for r in reports
        ],
    }
    path = out / "classify.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    return [path]


ORACLE_SUITE = [
    # (f, T_mK, rabi_MHz, detuning_MHz, window, offset_MHz)
    (0.5, 25.0, 0.37, 0.0, "01", 0.0),
    (0.5, 25.0, 0.37, 0.0, "01", 1.0),
    (0.5, 25.0, 0.37, 0.0, "01", -1.0),
    (0.5, 25.0, 0.37, 0.0, "01", 3.0),
    (0.5, 25.0, 0.37, 0.37, "01", 0.0),
    (0.5, 25.0, 0.37, 0.37, "01", -2.0),
    (0.5, 50.0, 0.37, 0.0, "01", 0.0),
    (0.5, 50.0, 0.37, 0.0, "01", 1.0),
    (0.5, 25.0, 40.0, 0.0, "01", 0.0),
    (0.5, 25.0, 40.0, 0.0, "01", 40.0),
    (0.5, 25.0, 40.0, 0.0, "01", -40.0),
    (0.5, 25.0, 40.0, 0.0, "01", 20.0),
    (0.5, 25.0, 40.0, 20.0, "01", 0.0),
    (0.5, 25.0, 40.0, 20.0, "01", -40.0),
    (0.5, 50.0, 40.0, 0.0, "01", 40.0),
    (0.525, 25.0, 1.4, 0.0, "01", 0.0),
    (0.525, 25.0, 1.4, 0.0, "01", 2.0),
    (0.525, 25.0, 1.4, 0.0, "02", 0.0),
    (0.525, 25.0, 1.4, 0.0, "02", 1.5),
    (0.525, 25.0, 1.4, 0.0, "02", -1.5),
    (0.525, 25.0, 1.4, 1.4, "02", 0.0),
    (0.525, 50.0, 1.4, 0.0, "02", 0.0),
    (0.525, 25.0, 40.0, 0.0, "01", 0.0),
    (0.525, 25.0, 40.0, 0.0, "01", 40.0),
    # strong-driving window-02 probes sit on the split peaks: at the deep
    # transparency center the response is dominated by the far tail of the
    # other window, which the probe-term rotating-wave retention drops
    (0.525, 25.0, 40.0, 0.0, "02", 44.0),
    (0.525, 25.0, 40.0, 0.0, "02", 40.0),
    (0.525, 25.0, 40.0, 0.0, "02", -40.0),
    (0.525, 25.0, 40.0, 20.0, "02", -31.0),
    (0.525, 50.0, 40.0, 0.0, "02", 40.0),
    (0.525, 50.0, 40.0, 0.0, "01", 0.0),
]


def cmd_oracle_check(cfg: RunConfig, out: Path, jobs: int) -> list[Path]:
    rows = []
    worst = 0.0
    for f, t_mk, rabi, det, window, offset in ORACLE_SUITE:
        sub = replace(cfg, f=f, t_mk=t_mk, rabi_mhz=rabi, detuning_mhz=det)
        ctx = _context(sub)
        center = ctx.freqs[0] if window == "01" else ctx.omega_prime
        omega_p = center + offset * MHZ
        analytic = sum(chi_q_grid(np.array([omega_p]), ctx))[0]
        estimate = susceptibility_from_timedomain(ctx, omega_p).chi_q
        rel = abs(estimate - analytic) / abs(analytic)
        worst = max(worst, rel)
        rows.append([f, t_mk, rabi, det, float(window == "02"), offset,
                     analytic.real * CHI_UNIT, analytic.imag * CHI_UNIT,
                     estimate.real * CHI_UNIT, estimate.imag * CHI_UNIT, rel])
    path = out / "oracle_check.csv"
    write_csv(path, cfg.metadata(),
              ["f", "T_mK", "rabi_MHz", "detuning_MHz", "window_is_02", "offset_MHz",
               "re_chi_analytic", "im_chi_analytic", "re_chi_timedomain", "im_chi_timedomain",
               "rel_err"], rows)
    if worst >= 1e-2:
        raise RuntimeError(f"oracle disagreement {worst:.3e} exceeds 1%")
    return [path]


FIGURE_FLUX = {"fig5": 0.5, "fig6": 0.5, "fig7": 0.525, "fig8": 0.525}
FIGURE_RABI = {"fig5": 0.37, "fig6": 40.0, "fig7": 1.4, "fig8": 40.0}
FIGURE_DETUNED = {"fig5": 0.37, "fig6": 20.0, "fig7": 1.4, "fig8": 20.0}
FIGURE_HALF_WINDOW = {"fig5": 10.0, "fig6": 80.0, "fig7": 10.0, "fig8": 80.0}


def _chi_panel_rows(ctx: ModelContext, window: str, offsets: np.ndarray):
    center = ctx.freqs[0] if window == "01" else ctx.omega_prime
    omega_p = center + offsets
    c1, c2 = chi_q_grid(omega_p, ctx)
    coupling = abs(ctx.currents.i01 if window == "01" else ctx.currents.i02)
    pair = decompose(window, ctx.rates, ctx.drive, coupling)
    rp, rm = pair.resonance_plus(offsets), pair.resonance_minus(offsets)
    chi = c1 + c2
    for i in range(offsets.size):
        yield [offsets[i] / MHZ, omega_p[i] / GHZ,
               chi[i].real * CHI_UNIT, chi[i].imag * CHI_UNIT,
               rp[i].real * CHI_UNIT, rp[i].imag * CHI_UNIT,
               rm[i].real * CHI_UNIT, rm[i].imag * CHI_UNIT]


_PANEL_COLS = ["offset_MHz", "omega_p_GHz", "re_chi_q", "im_chi_q",
               "re_R_plus", "im_R_plus", "re_R_minus", "im_R_minus"]


def cmd_reproduce(cfg: RunConfig, out: Path, jobs: int, target: str) -> list[Path]:
    if target == "fig2":
        base = replace(cfg, f=0.5)
        return cmd_fig2(base, out, jobs)
    if target == "fig4":
        return cmd_fig4(cfg, out, jobs)
    if target in FIGURE_FLUX:
        return cmd_chi_figure(cfg, out, target)
    raise ValueError(f"unknown reproduce target {target!r} "
                     f"(expected fig2, fig4, fig5, fig6, fig7 or fig8)")


def cmd_fig2(cfg: RunConfig, out: Path, jobs: int) -> list[Path]:
    grid = np.linspace(0.45, 0.55, 201)
    levels = sweep_levels(cfg.circuit_params(), grid, cfg.truncation(), jobs=jobs)
    currents = sweep_currents(cfg.circuit_params(), grid, cfg.truncation(), jobs=jobs)
    _require_rows(levels.errors, levels.ok)
    _require_rows(currents.errors, currents.ok)
    paths = []
    p = out / "fig2_levels.csv"
    write_csv(p, cfg.metadata(), ["f", "e0_EJ", "e1_EJ", "e2_EJ", "e3_EJ", "e4_EJ", "e5_EJ"],
              ([grid[i], *levels.energies[i]] for i in range(grid.size)))
    paths.append(p)
    p = out / "fig2_currents_offdiag.csv"
    write_csv(p, cfg.metadata(), ["f", "abs_i01_I0", "abs_i02_I0", "abs_i12_I0"],
              ([grid[i], currents.abs_i01[i], currents.abs_i02[i], currents.abs_i12[i]]
               for i in range(grid.size)))
    paths.append(p)
    p = out / "fig2_currents_diag.csv"
    write_csv(p, cfg.metadata(), ["f", "i00_I0", "i11_I0", "i22_I0"],
              ([grid[i], currents.i00[i], currents.i11[i], currents.i22[i]]
               for i in range(grid.size)))
    paths.append(p)
    return paths


def cmd_fig4(cfg: RunConfig, out: Path, jobs: int) -> list[Path]:
    paths = []
    f_grid = np.linspace(0.45, 0.55, 201)
    temps = (0.0, 25.0, 50.0)
    base = replace(cfg, rabi_mhz=0.0, detuning_mhz=0.0)

    cols = ["f"]
    series = []
    for t_mk in temps:
        ctx = _context(replace(base, t_mk=t_mk))
        sweep = sweep_rates("f", f_grid, ctx, jobs=jobs)
        _require_rows(sweep.errors, sweep.ok)
        series.append(sweep)
        cols += [f"g11_MHz_T{t_mk:g}mK", f"g22_MHz_T{t_mk:g}mK"]
    rows = ([f_grid[i]] + [x for s in series for x in (s.g11[i] / MHZ, s.g22[i] / MHZ)]
            for i in range(f_grid.size))
    p = out / "fig4_a.csv"
    write_csv(p, cfg.metadata(), cols, rows)
    paths.append(p)

    t_grid_mk = np.linspace(0.0, 100.0, 101)
    fluxes = (0.5, 0.51, 0.525)
    cols = ["T_mK"]
    series = []
    for f in fluxes:
        ctx = _context(replace(base, f=f))
        sweep = sweep_rates("T", t_grid_mk * 1e-3, ctx, jobs=jobs)
        _require_rows(sweep.errors, sweep.ok)
        series.append(sweep)
        cols += [f"g11_MHz_f{f:g}", f"g22_MHz_f{f:g}"]
    rows = ([t_grid_mk[i]] + [x for s in series for x in (s.g11[i] / MHZ, s.g22[i] / MHZ)]
            for i in range(t_grid_mk.size))
    p = out / "fig4_b.csv"
    write_csv(p, cfg.metadata(), cols, rows)
    paths.append(p)

    rabi_grid = np.linspace(0.0, 50.0, 201)
    sweeps = {}
    for f in fluxes:
        ctx = _context(replace(cfg, f=f, t_mk=25.0, detuning_mhz=0.0))
        sweep = sweep_rates("omega_d", rabi_grid * MHZ, ctx, jobs=jobs)
        _require_rows(sweep.errors, sweep.ok)
        sweeps[f] = sweep
    for panel, attr in (("c", "g11"), ("d", "g22"), ("e", "g12"), ("f", "g21")):
        cols = ["rabi_MHz"] + [f"{attr}_MHz_f{f:g}" for f in fluxes]
        rows = ([rabi_grid[i]] + [getattr(sweeps[f], attr)[i] / MHZ for f in fluxes]
                for i in range(rabi_grid.size))
        p = out / f"fig4_{panel}.csv"
        write_csv(p, cfg.metadata(), cols, rows)
        paths.append(p)
    return paths


def cmd_chi_figure(cfg: RunConfig, out: Path, target: str) -> list[Path]:
    f = FIGURE_FLUX[target]
    rabi = FIGURE_RABI[target]
    half = FIGURE_HALF_WINDOW[target] * MHZ
    offsets = np.linspace(-half, half, 2001)
    windows = ("01",) if f == 0.5 else ("01", "02")
    paths = []

    base = replace(cfg, f=f, rabi_mhz=rabi, t_mk=25.0, detuning_mhz=0.0)
    variants = [
        ("base", base),
        ("detuned", replace(base, detuning_mhz=FIGURE_DETUNED[target])),
        ("warm", replace(base, t_mk=50.0)),
    ]
    for window in windows:
        suffix = f"_window{window}" if len(windows) > 1 else ""
        ctx = _context(base)
        p = out / f"{target}_ab{suffix}.csv"
        write_csv(p, base.metadata(), _PANEL_COLS, _chi_panel_rows(ctx, window, offsets))
        paths.append(p)

        cols = ["offset_MHz", "omega_p_GHz"]
        chis = []
        for name, sub in variants:
            ctx_v = _context(sub)
            center = ctx_v.freqs[0] if window == "01" else ctx_v.omega_prime
            c1, c2 = chi_q_grid(center + offsets, ctx_v)
            chis.append(c1 + c2)
            cols += [f"re_chi_q_{name}", f"im_chi_q_{name}"]
        center = ctx.freqs[0] if window == "01" else ctx.omega_prime
        rows = ([offsets[i] / MHZ, (center + offsets[i]) / GHZ]
                + [x for chi in chis for x in (chi[i].real * CHI_UNIT, chi[i].imag * CHI_UNIT)]
                for i in range(offsets.size))
        p = out / f"{target}_cd{suffix}.csv"
        write_csv(p, base.metadata(), cols, rows)
        paths.append(p)
    return paths


def _context(cfg: RunConfig) -> ModelContext:
    return build_context(
        cfg.circuit_params(), cfg.drive(), cfg.temperature(),
        beta=cfg.beta, cutoff_mult=cfg.cutoff_mult, trunc=cfg.truncation(),
    )


def _require_rows(errors, ok):
    if not np.all(ok):
        index, message = errors[0]
        raise RuntimeError(f"sweep row {index} failed: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fluxeit",
        description="Driven three-level flux qubit: spectrum, rates, susceptibility, EIT/ATS.",
    )
    parser.add_argument("--config", type=Path, default=None, help="key-value config file")
    parser.add_argument("--jobs", type=int, default=1, help="worker threads for sweeps")
    parser.add_argument("--out", type=Path, default=None, help="output directory")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("spectrum", "currents", "rates", "susceptibility", "classify", "oracle-check"):
        sub.add_parser(name)
    rep = sub.add_parser("reproduce")
    rep.add_argument("target", help="one of fig2, fig4, fig5, fig6, fig7, fig8")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = parse_config(args.config.read_text(encoding="utf-8")) if args.config else RunConfig()
        out = args.out if args.out is not None else Path(cfg.output_dir)
        jobs = max(1, args.jobs)
        handlers = {
            "spectrum": cmd_spectrum,
            "currents": cmd_currents,
            "rates": cmd_rates,
            "susceptibility": cmd_susceptibility,
            "classify": cmd_classify,
            "oracle-check": cmd_oracle_check,
        }
        if args.command == "reproduce":
            paths = cmd_reproduce(cfg, out, jobs, args.target)
        else:
            paths = handlers[args.command](cfg, out, jobs)
    except Exception as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    for p in paths:
        print(p)
    return 0


if __name__ == "__main__":
    sys.exit(main())
