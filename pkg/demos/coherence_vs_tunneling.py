"""Quantum resources vs tunneling strength (both pairs swept together).

Coherence and entanglement part ways along this axis: a little tunneling
switches the entanglement on abruptly (the ground state snaps from the
incoherent doublet mixture to a near-Bell state), but strong tunneling kills
it again while the coherence keeps climbing toward its pure-product-state
plateau.  A stronger drive shifts the concurrence peak and speeds up the
mixed-entangled -> pure-separable handover.

Run:  python demos/coherence_vs_tunneling.py
Writes coherence_vs_tunneling.png next to this file.
"""

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from dqdsim import ModelParams, SweepSpec, run_sweep

OUT = __file__.replace(".py", ".png")

COULOMB = 30.0
TEMPERATURE = 0.1
OMEGAS = (0.0, 15.0, 25.0)
FIELDS = ("c_total", "c_local", "c_correlated", "concurrence")


def main():
    print("=" * 66)
    print("QUANTUM RESOURCES VS TUNNELING (delta_A = delta_B swept together)")
    print(f"(V = {COULOMB:g}, T = {TEMPERATURE:g})")
    print("=" * 66)

    sweeps = {}
    for omega in OMEGAS:
        base = ModelParams(omega, 1.0, 1.0, COULOMB, TEMPERATURE)
        spec = SweepSpec("tunneling", 0.0, 40.0, 401, base, tie_deltas=True)
        sweeps[omega] = run_sweep(spec)

    print(f"\n  {'omega':>6} {'conc(0)':>9} {'peak conc':>10} {'at delta':>9} "
          f"{'conc(40)':>9} {'c_total(40)':>12}")
    for omega in OMEGAS:
        result = sweeps[omega]
        grid = result.spec.grid()
        conc = np.array([r.concurrence for r in result.records])
        c_total = np.array([r.c_total for r in result.records])
        k = int(np.argmax(conc))
        print(f"  {omega:6.0f} {conc[0]:9.2e} {conc[k]:10.4f} {grid[k]:9.2f} "
              f"{conc[-1]:9.4f} {c_total[-1]:12.4f}")
    print("\nEntanglement jumps up at weak tunneling, peaks, then drains away")
    print("as the state purifies; total coherence saturates toward the")
    print("maximally coherent product-state value 3.  The peak moves with the")
    print("drive frequency.")

    fig, axes = plt.subplots(2, 2, figsize=(11, 8), sharex=True)
    titles = ("total coherence", "local coherence", "correlated coherence", "concurrence")
    for ax, field, title in zip(axes.flat, FIELDS, titles):
        for omega in OMEGAS:
            result = sweeps[omega]
            ax.plot(result.spec.grid(), [getattr(r, field) for r in result.records],
                    label=f"$\\omega={omega:g}$")
        ax.set_title(title)
        ax.set_xlabel("tunneling strength $\\delta_A=\\delta_B$")
    axes[0, 0].axhline(3.0, color="gray", lw=0.6, ls=":")
    axes[0, 0].annotate("pure-state plateau", (20.0, 2.78), fontsize=8, color="gray")
    axes[0, 0].legend()
    fig.suptitle(f"$V={COULOMB:g}$, $T={TEMPERATURE:g}$")
    fig.tight_layout()
    fig.savefig(OUT, dpi=150)
    print(f"\nFigure written to {OUT}")


if __name__ == "__main__":
    main()
