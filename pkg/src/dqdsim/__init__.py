"""Thermal coherence and entanglement of two coupled double quantum dots.

A small numpy library (plus a ``dqdsim`` command-line tool) that builds the
four-level Hamiltonian of two tunnel-coupled double-dot charge qubits under
an external drive, forms its Gibbs state at finite temperature, and evaluates
the l1-norm coherence (total / local / correlated) and the Wootters
concurrence across parameter sweeps, including the level-crossing Coulomb
threshold and the entanglement sudden-death temperature.
"""

from .linalg import (
    EigenSystem,
    JacobiConvergenceError,
    boltzmann_weights,
    eigen_sym4,
    eigvals_sym4,
    sqrt_psd4,
    sym_matrix,
)
from .model import (
    BASIS_LABELS,
    TEMPERATURE_FLOOR,
    ModelParams,
    PauliCoefficients,
    Populations,
    ThermalState,
    build_hamiltonian,
    gibbs_state_oracle,
    matrix_exp_oracle,
    pauli_coefficients,
    populations,
    reconstruct_from_pauli,
    reduce_subsystem,
    thermal_state,
)
from .quantifiers import (
    QuantifierRecord,
    coherence_decomposition,
    concurrence,
    evaluate_point,
    l1_coherence,
    spin_flipped,
)
from .sweep import (
    CONCURRENCE_EPS,
    SweepPointError,
    SweepResult,
    SweepSpec,
    find_level_crossing,
    find_sudden_death,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BASIS_LABELS",
    "CONCURRENCE_EPS",
    "EigenSystem",
    "JacobiConvergenceError",
    "ModelParams",
    "PauliCoefficients",
    "Populations",
    "QuantifierRecord",
    "SweepPointError",
    "SweepResult",
    "SweepSpec",
    "TEMPERATURE_FLOOR",
    "ThermalState",
    "boltzmann_weights",
    "build_hamiltonian",
    "coherence_decomposition",
    "concurrence",
    "eigen_sym4",
    "eigvals_sym4",
    "evaluate_point",
    "find_level_crossing",
    "find_sudden_death",
    "gibbs_state_oracle",
    "l1_coherence",
    "matrix_exp_oracle",
    "pauli_coefficients",
    "populations",
    "reconstruct_from_pauli",
    "reduce_subsystem",
    "run_sweep",
    "spin_flipped",
    "sqrt_psd4",
    "sym_matrix",
    "thermal_state",
]
