"""Quantum resources vs Coulomb coupling at low temperature.

With the drive on, ramping the Coulomb coupling first pumps up the coherence
quantifiers; past the crossing threshold V = w they turn around and decay
(the population inversion demoted the coherent levels).  The concurrence
instead vanishes identically at V = 0, where the Hamiltonian is a sum of
local terms and the Gibbs state factorizes: correlated coherence without any
entanglement.

Run:  python demos/coherence_vs_coulomb.py
Writes coherence_vs_coulomb.png next to this file.
"""

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from dqdsim import ModelParams, SweepSpec, evaluate_point, run_sweep

OUT = __file__.replace(".py", ".png")

TEMPERATURE = 0.1
DELTA = 2.0
OMEGAS = (0.0, 5.0, 15.0)
FIELDS = ("c_total", "c_local", "c_correlated", "concurrence")


def main():
    print("=" * 66)
    print("QUANTUM RESOURCES VS COULOMB COUPLING")
    print(f"(T = {TEMPERATURE:g}, delta_A = delta_B = {DELTA:g})")
    print("=" * 66)

    sweeps = {}
    for omega in OMEGAS:
        base = ModelParams(omega, DELTA, DELTA, 1.0, TEMPERATURE)
        sweeps[omega] = run_sweep(SweepSpec("coulomb", 0.0, 40.0, 401, base))

    for omega in OMEGAS:
        result = sweeps[omega]
        grid = result.spec.grid()
        c_total = np.array([r.c_total for r in result.records])
        peak = int(np.argmax(c_total))
        interior = 0 < peak < len(grid) - 1
        where = f"peaks at V = {grid[peak]:5.2f}" if interior else "is monotone"
        print(f"  omega = {omega:4.0f}:  c_total {where}"
              + (f" (threshold near V = omega = {omega:g})" if interior and omega else ""))

    # V = 0: separable but still correlated
    print("\nat V = 0 (factorizing Gibbs state):")
    for omega in OMEGAS:
        rec = evaluate_point(ModelParams(omega, DELTA, DELTA, 0.0, TEMPERATURE))
        print(f"  omega = {omega:4.0f}:  concurrence = {rec.concurrence:.1e}   "
              f"c_correlated = {rec.c_correlated:.4f}")
    print("The correlated coherence is finite (largest for omega = 0) even")
    print("though the entanglement is exactly zero: correlation does not")
    print("require entanglement.")

    fig, axes = plt.subplots(2, 2, figsize=(11, 8), sharex=True)
    titles = ("total coherence", "local coherence", "correlated coherence", "concurrence")
    for ax, field, title in zip(axes.flat, FIELDS, titles):
        for omega in OMEGAS:
            result = sweeps[omega]
            ax.plot(result.spec.grid(), [getattr(r, field) for r in result.records],
                    label=f"$\\omega={omega:g}$")
            if omega > 0.0:
                ax.axvline(omega, color="gray", lw=0.6, ls=":")
        ax.set_title(title)
        ax.set_xlabel("Coulomb coupling $V$")
    axes[0, 0].legend()
    fig.suptitle(f"$T={TEMPERATURE:g}$, $\\delta_A=\\delta_B={DELTA:g}$"
                 " (dotted lines: $V=\\omega$ thresholds)")
    fig.tight_layout()
    fig.savefig(OUT, dpi=150)
    print(f"\nFigure written to {OUT}")


if __name__ == "__main__":
    main()
