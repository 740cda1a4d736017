"""Cross-check the closed-form susceptibility against brute-force time
integration of the driven coherences.

Sweeps the probe across the EIT window at f = 0.525 analytically and drops
time-domain estimates on top at a handful of frequencies; the two routes
share only the damping rates and agree to well below a percent.
"""

import math
import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from fluxeit import CircuitParams, DriveConfig, build_context, susceptibility_from_timedomain
from fluxeit.model import chi_q_grid

MHZ = 2 * math.pi * 1e6
GHZ_UNIT = 2 * math.pi * 1e9
OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

ctx = build_context(CircuitParams(f=0.525), DriveConfig(omega_d_mag=1.4 * MHZ), 0.025)
center = ctx.omega_prime

offsets = np.linspace(-8, 8, 1601) * MHZ
c1, c2 = chi_q_grid(center + offsets, ctx)
chi = (c1 + c2) * GHZ_UNIT

sample_offsets = np.array([-6, -3, -1.5, 0, 1.5, 3, 6]) * MHZ
estimates = []
for off in sample_offsets:
    est = susceptibility_from_timedomain(ctx, center + off)
    analytic = sum(chi_q_grid(np.array([center + off]), ctx))[0]
    rel = abs(est.chi_q - analytic) / abs(analytic)
    estimates.append(est.chi_q * GHZ_UNIT)
    print(f"offset {off / MHZ:+5.1f} MHz: relative deviation {rel:.2e}")

fig, axes = plt.subplots(1, 2, figsize=(9, 3.6), constrained_layout=True)
for ax, part, fn in ((axes[0], "Re", np.real), (axes[1], "Im", np.imag)):
    ax.plot(offsets / MHZ, fn(chi), "C0", label="closed form")
    ax.plot(sample_offsets / MHZ, fn(np.array(estimates)), "C3o", ms=5, mfc="none",
            label="time-domain")
    ax.set_xlabel("probe detuning from window 02 / $2\\pi$ (MHz)")
    ax.set_ylabel(f"{part} $\\chi_q$ ($I_0^2/\\hbar$ per $2\\pi$ GHz)")
    ax.legend(fontsize=8)
fig.savefig(OUT / "timedomain_check.png", dpi=160)
print(f"wrote {OUT / 'timedomain_check.png'}")
