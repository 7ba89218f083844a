"""Two tunnel-coupled double quantum dots under an external driving field.

Each double dot holds one electron that can sit in the left or right well,
giving two charge qubits.  An external stimulus of frequency ``omega`` acts
as a local sigma_z field on both qubits, ``delta_a``/``delta_b`` are the
intra-pair tunneling amplitudes (sigma_x terms) and ``coulomb`` is the
inter-pair Coulomb repulsion (a sigma_z (x) sigma_z term).  Energies are
dimensionless with k_B = hbar = 1.

Basis order, fixed everywhere in this package (indices 1..4):

    1: |l_A l_B>    2: |l_A r_B>    3: |r_A l_B>    4: |r_A r_B>

with |l> the +1 eigenstate of sigma_z.  This is the unique order for which
the Hamiltonian diagonal reads (V + 2w, -V, -V, V - 2w), making |r_A r_B>
the ground state once the drive dominates the Coulomb term (w > V).

All entry formulas below (Pauli coefficients, partial traces) are written
against this order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .linalg import EigenSystem, boltzmann_weights, eigen_sym4, sym_matrix

__all__ = [
    "BASIS_LABELS",
    "TEMPERATURE_FLOOR",
    "ModelParams",
    "PauliCoefficients",
    "Populations",
    "ThermalState",
    "build_hamiltonian",
    "gibbs_state_oracle",
    "matrix_exp_oracle",
    "pauli_coefficients",
    "populations",
    "reconstruct_from_pauli",
    "reduce_subsystem",
    "thermal_state",
]

#: Local product basis, in the fixed index order documented above.
BASIS_LABELS = ("|l_A l_B>", "|l_A r_B>", "|r_A l_B>", "|r_A r_B>")

#: Smallest accepted temperature.  Below it beta * ||H|| can exceed 1e7 and
#: the Gibbs state is numerically indistinguishable from the ground-space
#: projector, which is better computed from the eigensystem directly.
TEMPERATURE_FLOOR = 1e-4

_SX = np.array([[0.0, 1.0], [1.0, 0.0]])
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]])
_I2 = np.eye(2)
# sigma_y (x) sigma_y is real in this basis: antidiagonal (-1, 1, 1, -1).
_SYSY = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)


@dataclass(frozen=True)
class ModelParams:
    """The five physical knobs, all in dimensionless energy units.

    omega:       transition frequency of the external stimulus
    delta_a/b:   tunneling coupling strength within dot pair A / B
    coulomb:     Coulomb interaction between the pairs
    temperature: absolute temperature (> TEMPERATURE_FLOOR)

    Negative couplings are rejected: the model's phase structure is only
    meaningful for omega, delta, coulomb >= 0.
    """

    omega: float
    delta_a: float
    delta_b: float
    coulomb: float
    temperature: float

    def __post_init__(self):
        for name in ("omega", "delta_a", "delta_b", "coulomb", "temperature"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        for name in ("omega", "delta_a", "delta_b", "coulomb"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")
        if self.temperature < TEMPERATURE_FLOOR:
            raise ValueError(
                f"temperature must be >= {TEMPERATURE_FLOOR} (got "
                f"{self.temperature}); below that the thermal state is "
                "numerically a ground-space projector, which is better built "
                "directly from the eigenvectors of the Hamiltonian"
            )

    @property
    def beta(self) -> float:
        """Inverse temperature 1/T (k_B = 1)."""
        return 1.0 / self.temperature


@dataclass(frozen=True)
class ThermalState:
    """Gibbs equilibrium state of the coupled pair.

    rho:         4x4 density matrix in the local basis
    eigen:       eigensystem of the Hamiltonian (energies ascending)
    populations: Boltzmann populations aligned with eigen.values
    """

    rho: np.ndarray
    eigen: EigenSystem
    populations: np.ndarray


@dataclass(frozen=True)
class PauliCoefficients:
    """The nine nonvanishing Bloch-tensor coefficients of the thermal state.

    Index convention 1 <-> sigma_x, 2 <-> sigma_y, 3 <-> sigma_z, first index
    qubit A, second qubit B; so t13 multiplies sigma_x (x) sigma_z and t31
    multiplies sigma_z (x) sigma_x.  For the real states produced by this
    model these nine coefficients determine the density matrix completely.
    """

    a1: float
    a2: float
    b1: float
    b2: float
    t11: float
    t22: float
    t33: float
    t13: float
    t31: float


def build_hamiltonian(params: ModelParams) -> np.ndarray:
    """Hamiltonian of the coupled pair in the fixed local basis.

    Equivalent operator form:
        w (sz x I + I x sz) + da (sx x I) + db (I x sx) + V (sz x sz)
    """
    w, da, db, v = params.omega, params.delta_a, params.delta_b, params.coulomb
    return np.array(
        [
            [v + 2.0 * w, db, da, 0.0],
            [db, -v, 0.0, da],
            [da, 0.0, -v, db],
            [0.0, da, db, v - 2.0 * w],
        ]
    )


def thermal_state(params: ModelParams) -> ThermalState:
    """Gibbs state exp(-H/T) / Z via eigendecomposition.

    The Boltzmann weighting is done in the min-shifted convention, so
    arbitrarily low temperatures (down to TEMPERATURE_FLOOR) are safe.
    """
    eigen = eigen_sym4(build_hamiltonian(params))
    weights, z = boltzmann_weights(eigen.values, params.beta)
    probs = weights / z
    rho = (eigen.vectors * probs) @ eigen.vectors.T
    rho = (rho + rho.T) / 2.0
    return ThermalState(rho=rho, eigen=eigen, populations=probs)


def matrix_exp_oracle(h, beta: float) -> np.ndarray:
    """exp(-beta * h) by scaling and squaring of a 20-term Taylor series.

    Verification path only: the argument is halved until its 1-norm is at
    most 0.5 (truncation error < 1e-14 there), the series is summed, and the
    result squared back up.  Production thermal states always go through the
    eigendecomposition; this routine exists so tests can check that route
    against an independent one.
    """
    a = -float(beta) * sym_matrix(h)
    if not np.all(np.isfinite(a)):
        raise ValueError("beta * h must be finite")
    n = a.shape[0]
    norm1 = float(np.abs(a).sum(axis=0).max())
    squarings = 0
    while norm1 > 0.5:
        norm1 /= 2.0
        squarings += 1
    a = a / (2.0**squarings)
    result = np.eye(n)
    term = np.eye(n)
    for k in range(1, 21):
        term = term @ a / k
        result = result + term
    for _ in range(squarings):
        result = result @ result
    return result


def gibbs_state_oracle(h, temperature: float) -> np.ndarray:
    """Reference Gibbs state from the Taylor exponential, normalized.

    Shifting by a Gershgorin lower bound of the spectrum (computed from the
    entries, not from any eigensolver) keeps every exponent nonpositive, so
    the unnormalized exponential cannot overflow at any temperature; the
    shift cancels on normalization.  Test-side counterpart of
    ``thermal_state``.
    """
    m = sym_matrix(h)
    radii = np.abs(m).sum(axis=1) - np.abs(np.diag(m))
    lower = float((np.diag(m) - radii).min())
    w = matrix_exp_oracle(m - lower * np.eye(m.shape[0]), 1.0 / float(temperature))
    rho = w / np.trace(w)
    return (rho + rho.T) / 2.0


def pauli_coefficients(rho) -> PauliCoefficients:
    """Read the nine Bloch coefficients off the density-matrix entries.

    Entry formulas (1-indexed, fixed basis order):
        a1 = 2(r13 + r24)            a2 = r11 + r22 - r33 - r44
        b1 = 2(r12 + r34)            b2 = r11 - r22 + r33 - r44
        t11 = 2(r14 + r23)           t22 = 2(r23 - r14)
        t33 = r11 - r22 - r33 + r44
        t13 = 2(r13 - r24)           t31 = 2(r12 - r34)
    """
    r = np.asarray(rho, dtype=float)
    return PauliCoefficients(
        a1=2.0 * (r[0, 2] + r[1, 3]),
        a2=r[0, 0] + r[1, 1] - r[2, 2] - r[3, 3],
        b1=2.0 * (r[0, 1] + r[2, 3]),
        b2=r[0, 0] - r[1, 1] + r[2, 2] - r[3, 3],
        t11=2.0 * (r[0, 3] + r[1, 2]),
        t22=2.0 * (r[1, 2] - r[0, 3]),
        t33=r[0, 0] - r[1, 1] - r[2, 2] + r[3, 3],
        t13=2.0 * (r[0, 2] - r[1, 3]),
        t31=2.0 * (r[0, 1] - r[2, 3]),
    )


def reconstruct_from_pauli(c: PauliCoefficients) -> np.ndarray:
    """Assemble the density matrix back from its Bloch coefficients.

    Round-trips with ``pauli_coefficients`` to better than 1e-12 on every
    state this model produces.
    """
    out = (
        np.eye(4)
        + c.a1 * np.kron(_SX, _I2)
        + c.a2 * np.kron(_SZ, _I2)
        + c.b1 * np.kron(_I2, _SX)
        + c.b2 * np.kron(_I2, _SZ)
        + c.t11 * np.kron(_SX, _SX)
        + c.t22 * _SYSY
        + c.t33 * np.kron(_SZ, _SZ)
        + c.t13 * np.kron(_SX, _SZ)
        + c.t31 * np.kron(_SZ, _SX)
    )
    return out / 4.0


def reduce_subsystem(rho, which: str) -> np.ndarray:
    """Reduced 2x2 state of dot pair "A" or "B" (literal partial trace).

    In the fixed basis order, tracing out B gives diagonal
    (r11 + r22, r33 + r44) and off-diagonal r13 + r24; tracing out A gives
    diagonal (r11 + r33, r22 + r44) and off-diagonal r12 + r34.
    """
    r = np.asarray(rho, dtype=float)
    if which == "A":
        out = np.array(
            [
                [r[0, 0] + r[1, 1], r[0, 2] + r[1, 3]],
                [r[2, 0] + r[3, 1], r[2, 2] + r[3, 3]],
            ]
        )
    elif which == "B":
        out = np.array(
            [
                [r[0, 0] + r[2, 2], r[0, 1] + r[2, 3]],
                [r[1, 0] + r[3, 2], r[1, 1] + r[3, 3]],
            ]
        )
    else:
        raise ValueError(f'subsystem must be "A" or "B", got {which!r}')
    return (out + out.T) / 2.0


class Populations(NamedTuple):
    """Energy levels (ascending) with their Boltzmann populations."""

    energies: np.ndarray
    probabilities: np.ndarray


def populations(params: ModelParams) -> Populations:
    """Boltzmann level populations paired with the ascending energies."""
    eigen = eigen_sym4(build_hamiltonian(params))
    weights, z = boltzmann_weights(eigen.values, params.beta)
    return Populations(eigen.values, weights / z)
