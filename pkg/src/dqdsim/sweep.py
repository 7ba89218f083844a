"""Parameter sweeps and critical-point searches.

One-dimensional uniform sweeps over temperature, Coulomb coupling, tunneling
strength or drive frequency, plus two root/extremum finders:

* the entanglement sudden-death temperature (bisection on the boolean
  "concurrence still positive" indicator, which is robust against the kink
  the max(0, .) puts into the concurrence at the death point), and
* the level-crossing Coulomb value (golden-section search on the spectral
  gap between the separable branch and the entangled doublet).

Grid points are evaluated independently by a pure function, so sweeps may
run on a thread pool; record order always follows the grid.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .linalg import eigvals_sym4
from .model import ModelParams, build_hamiltonian
from .quantifiers import QuantifierRecord, evaluate_point

__all__ = [
    "CONCURRENCE_EPS",
    "SWEEP_VARIABLES",
    "SweepPointError",
    "SweepResult",
    "SweepSpec",
    "branch_gap",
    "find_level_crossing",
    "find_sudden_death",
    "run_sweep",
]

#: Concurrence below this counts as zero (one order above accumulated
#: roundoff in the eigensolver chain).
CONCURRENCE_EPS = 1e-10

SWEEP_VARIABLES = ("temperature", "coulomb", "tunneling", "omega")

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class SweepPointError(RuntimeError):
    """A grid point failed; the message carries the offending value."""


@dataclass(frozen=True)
class SweepSpec:
    """A uniform 1-D sweep of one model parameter.

    variable is one of SWEEP_VARIABLES; "tunneling" drives delta_a, and with
    tie_deltas set it drives delta_a and delta_b together.  base supplies the
    non-swept parameters.  The endpoint parameter sets are validated eagerly
    so an invalid range fails here, not mid-sweep.
    """

    variable: str
    start: float
    stop: float
    steps: int
    base: ModelParams
    tie_deltas: bool = False

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(
                f"unknown sweep variable {self.variable!r}; "
                f"expected one of {SWEEP_VARIABLES}"
            )
        object.__setattr__(self, "start", float(self.start))
        object.__setattr__(self, "stop", float(self.stop))
        if not (self.start < self.stop):
            raise ValueError(f"need start < stop, got [{self.start}, {self.stop}]")
        if int(self.steps) != self.steps or self.steps < 2:
            raise ValueError(f"steps must be an integer >= 2, got {self.steps}")
        object.__setattr__(self, "steps", int(self.steps))
        if self.tie_deltas and self.variable != "tunneling":
            raise ValueError("tie_deltas only makes sense for a tunneling sweep")
        self.params_at(self.start)
        self.params_at(self.stop)

    def params_at(self, value: float) -> ModelParams:
        """Parameter set with the swept variable replaced by value."""
        value = float(value)
        if self.variable == "temperature":
            return replace(self.base, temperature=value)
        if self.variable == "coulomb":
            return replace(self.base, coulomb=value)
        if self.variable == "omega":
            return replace(self.base, omega=value)
        if self.tie_deltas:
            return replace(self.base, delta_a=value, delta_b=value)
        return replace(self.base, delta_a=value)

    def grid(self) -> np.ndarray:
        """The sweep grid, endpoints included."""
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class SweepResult:
    """Sweep records in grid order, one per point."""

    spec: SweepSpec
    records: tuple


def run_sweep(spec: SweepSpec, threads: int | None = None) -> SweepResult:
    """Evaluate every grid point of a sweep.

    threads=None (or 1) runs serially; threads=n uses a pool of n workers.
    Either way the records come back in grid order and are bitwise identical
    between runs: the point evaluation is a pure function.
    """

    def point(value):
        try:
            return evaluate_point(spec.params_at(value))
        except Exception as exc:
            raise SweepPointError(
                f"sweep point {spec.variable}={float(value):g} failed: {exc}"
            ) from exc

    grid = spec.grid()
    if threads is not None and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = tuple(pool.map(point, grid))
    else:
        records = tuple(point(v) for v in grid)
    return SweepResult(spec=spec, records=records)


def find_sudden_death(
    base: ModelParams, t_lo: float, t_hi: float, tol: float
) -> float:
    """Critical temperature where the concurrence dies, by bisection.

    Bisects the indicator "concurrence > CONCURRENCE_EPS", which must be true
    at t_lo and false at t_hi; returns the bracket midpoint once the bracket
    is narrower than tol.  Bisecting the indicator instead of root-finding on
    the concurrence itself sidesteps the kink at the death point.
    """
    t_lo, t_hi, tol = float(t_lo), float(t_hi), float(tol)
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if not (t_lo < t_hi):
        raise ValueError(f"need t_lo < t_hi, got [{t_lo}, {t_hi}]")

    def alive(t: float) -> bool:
        rec = evaluate_point(replace(base, temperature=t))
        return rec.concurrence > CONCURRENCE_EPS

    if not alive(t_lo):
        raise ValueError(
            f"no sudden death in bracket: concurrence already zero at T={t_lo:g}"
        )
    if alive(t_hi):
        raise ValueError(
            f"no sudden death in bracket: concurrence still positive at T={t_hi:g}"
        )
    lo, hi = t_lo, t_hi
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if alive(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def branch_gap(base: ModelParams, coulomb: float) -> float:
    """Spectral gap between the separable branch and the entangled doublet.

    Implemented as lambda_3 - lambda_1 of the ascending spectrum.  At zero
    tunneling the two lowest level *branches* are the doubly degenerate
    entangled pair at -V and the separable level at V - 2w, so the branch
    separation is |2(V - w)| and vanishes exactly at the crossing V = w.
    Nonzero tunneling splits the doublet, but only by an amount that never
    reorders the branches, and turns the crossing into an avoided one with a
    strictly positive minimum gap.
    """
    values = eigvals_sym4(build_hamiltonian(replace(base, coulomb=coulomb)))
    return float(values[2] - values[0])


def find_level_crossing(
    base: ModelParams, v_lo: float, v_hi: float, tol: float = 1e-6
) -> float:
    """Coulomb value minimizing the branch gap, by golden-section search.

    At zero tunneling this is the exact level crossing V = w; at nonzero
    tunneling it is the operational center of the avoided crossing (where the
    population inversion happens).  Raises if the minimum sits on the bracket
    boundary, i.e. the gap is monotone and there is no crossing inside.
    """
    v_lo, v_hi, tol = float(v_lo), float(v_hi), float(tol)
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if not (v_lo < v_hi):
        raise ValueError(f"need v_lo < v_hi, got [{v_lo}, {v_hi}]")

    lo, hi = v_lo, v_hi
    m1 = hi - _INV_GOLDEN * (hi - lo)
    m2 = lo + _INV_GOLDEN * (hi - lo)
    f1 = branch_gap(base, m1)
    f2 = branch_gap(base, m2)
    while hi - lo > tol:
        if f1 < f2:
            hi, m2, f2 = m2, m1, f1
            m1 = hi - _INV_GOLDEN * (hi - lo)
            f1 = branch_gap(base, m1)
        else:
            lo, m1, f1 = m1, m2, f2
            m2 = lo + _INV_GOLDEN * (hi - lo)
            f2 = branch_gap(base, m2)
    crossing = 0.5 * (lo + hi)
    if min(crossing - v_lo, v_hi - crossing) <= 2.0 * tol:
        raise ValueError(
            "no interior minimum in bracket: the branch gap is monotone on "
            f"[{v_lo:g}, {v_hi:g}]"
        )
    return crossing
