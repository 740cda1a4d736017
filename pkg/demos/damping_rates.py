"""How the environment-induced damping rates move with flux, temperature
and drive strength.

The diagonal rates g11/g22 set the linewidths of the two probe windows; the
drive-induced cross rates g12/g21 grow linearly with the Rabi frequency and
are responsible for unequal peak heights in strong driving.
"""

import math
import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from fluxeit import CircuitParams, DriveConfig, build_context, sweep_rates

MHZ = 2 * math.pi * 1e6
OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

fig, axes = plt.subplots(1, 3, figsize=(12, 3.6), constrained_layout=True)

# (a) versus flux, three temperatures, drive off
f_grid = np.linspace(0.45, 0.55, 101)
for t_mk, color in ((0.0, "C0"), (25.0, "C1"), (50.0, "C2")):
    ctx = build_context(CircuitParams(), DriveConfig(omega_d_mag=0.0), t_mk * 1e-3)
    sweep = sweep_rates("f", f_grid, ctx, jobs=4)
    axes[0].plot(f_grid, sweep.g11 / MHZ, color=color, label=f"$\\gamma_{{11}}$, {t_mk:g} mK")
    axes[0].plot(f_grid, sweep.g22 / MHZ, color=color, ls="--")
axes[0].set_xlabel("reduced flux $f$")
axes[0].set_ylabel("rate / $2\\pi$ (MHz)")
axes[0].set_title("vs flux (dashed: $\\gamma_{22}$)")
axes[0].legend(fontsize=7)

# (b) versus temperature at three flux points
t_grid = np.linspace(0.0, 0.1, 51)
for f, color in ((0.5, "C0"), (0.51, "C1"), (0.525, "C2")):
    ctx = build_context(CircuitParams(f=f), DriveConfig(omega_d_mag=0.0), 0.025)
    sweep = sweep_rates("T", t_grid, ctx, jobs=4)
    axes[1].plot(t_grid * 1e3, sweep.g11 / MHZ, color=color, label=f"$f = {f}$")
    axes[1].plot(t_grid * 1e3, sweep.g22 / MHZ, color=color, ls="--")
axes[1].set_xlabel("temperature (mK)")
axes[1].set_ylabel("rate / $2\\pi$ (MHz)")
axes[1].set_title("monotone in $T$")
axes[1].legend(fontsize=8)

# (c) cross rates versus Rabi frequency at 25 mK
rabi = np.linspace(0.0, 50.0, 101)
for f, color in ((0.5, "C0"), (0.51, "C1"), (0.525, "C2")):
    ctx = build_context(CircuitParams(f=f), DriveConfig(omega_d_mag=0.0), 0.025)
    sweep = sweep_rates("omega_d", rabi * MHZ, ctx, jobs=4)
    axes[2].plot(rabi, sweep.g12 / MHZ, color=color, label=f"$\\gamma_{{12}}$, $f={f}$")
    axes[2].plot(rabi, sweep.g21 / MHZ, color=color, ls="--")
axes[2].set_xlabel("$|\\Omega_D|/2\\pi$ (MHz)")
axes[2].set_ylabel("rate / $2\\pi$ (MHz)")
axes[2].set_title("drive-induced cross rates (linear)")
axes[2].legend(fontsize=7)

fig.savefig(OUT / "damping_rates.png", dpi=160)
print(f"wrote {OUT / 'damping_rates.png'}")
