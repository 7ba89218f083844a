import numpy as np
import pytest

from dqdsim.model import ModelParams, thermal_state
from dqdsim.quantifiers import (
    coherence_decomposition,
    concurrence,
    evaluate_point,
    l1_coherence,
    spin_flipped,
)

import oracles


def random_params(rng):
    return ModelParams(
        omega=rng.uniform(0.0, 50.0),
        delta_a=rng.uniform(0.0, 50.0),
        delta_b=rng.uniform(0.0, 50.0),
        coulomb=rng.uniform(0.0, 50.0),
        temperature=rng.uniform(0.05, 100.0),
    )


class TestL1Coherence:
    def test_maximally_mixed(self):
        assert l1_coherence(np.eye(4) / 4.0) == 0.0

    def test_bell_projector(self):
        assert l1_coherence(oracles.BELL_PROJECTOR) == 1.0

    def test_single_qubit(self):
        assert abs(l1_coherence([[0.5, 0.2], [0.2, 0.5]]) - 0.4) < 1e-15

    def test_matches_entrywise_sum(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            rho = oracles.random_density(rng)
            assert abs(l1_coherence(rho) - oracles.l1_direct(rho)) < 1e-13


class TestCoherenceDecomposition:
    def test_bell_projector(self):
        c_total, c_local, c_corr = coherence_decomposition(oracles.BELL_PROJECTOR)
        assert (c_total, c_local, c_corr) == (1.0, 0.0, 1.0)

    def test_product_state_split(self):
        # both factors have single-qubit coherence 0.4, so the Kronecker
        # identity gives (0.96, 0.8, 0.16)
        factor = np.array([[0.5, 0.2], [0.2, 0.5]])
        c_total, c_local, c_corr = coherence_decomposition(np.kron(factor, factor))
        assert abs(c_total - 0.96) < 1e-12
        assert abs(c_local - 0.8) < 1e-12
        assert abs(c_corr - 0.16) < 1e-12

    def test_matches_entry_formulas_on_thermal_state(self):
        rho = thermal_state(ModelParams(15.0, 2.0, 2.0, 30.0, 0.5)).rho
        expected = oracles.coherences_direct(rho)
        got = coherence_decomposition(rho)
        assert np.max(np.abs(np.array(got) - np.array(expected))) < 1e-13

    def test_additivity_and_nonnegativity_random(self):
        rng = np.random.default_rng(14)
        for _ in range(500):
            rho = oracles.random_density(rng)
            c_total, c_local, c_corr = coherence_decomposition(rho)
            assert abs(c_total - (c_local + c_corr)) <= 1e-12
            assert c_total >= 0.0 and c_local >= 0.0 and c_corr >= 0.0
            assert c_total <= 3.0 + 1e-12  # dimension bound for 4x4 states


class TestSpinFlipped:
    def test_maximally_mixed_invariant(self):
        assert np.array_equal(spin_flipped(np.eye(4) / 4.0), np.eye(4) / 4.0)

    def test_bell_invariant(self):
        assert np.array_equal(spin_flipped(oracles.BELL_PROJECTOR), oracles.BELL_PROJECTOR)

    def test_diagonal_reversal(self):
        rho = np.diag([0.1, 0.2, 0.3, 0.4])
        assert np.array_equal(spin_flipped(rho), np.diag([0.4, 0.3, 0.2, 0.1]))

    def test_involution_exact(self):
        rng = np.random.default_rng(21)
        for _ in range(50):
            rho = oracles.random_density(rng)
            assert np.array_equal(spin_flipped(spin_flipped(rho)), rho)


class TestConcurrence:
    def test_bell_projector(self):
        assert abs(concurrence(oracles.BELL_PROJECTOR) - 1.0) < 1e-12

    def test_diagonal_states_are_separable(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            p = rng.random(4)
            assert concurrence(np.diag(p / p.sum())) == 0.0

    def test_werner_states(self):
        assert abs(concurrence(oracles.werner(0.5)) - 0.25) < 1e-10
        assert concurrence(oracles.werner(1.0 / 3.0)) <= 1e-12

    def test_xstate_closed_form(self):
        rng = np.random.default_rng(20250811)
        worst = 0.0
        for _ in range(1000):
            rho = oracles.random_xstate(rng)
            worst = max(worst, abs(concurrence(rho) - oracles.xstate_concurrence(rho)))
        assert worst < 1e-9

    def test_matches_nonsymmetric_eigenvalue_route(self):
        # The reference route square-roots the (absolutely ~eps-accurate)
        # eigenvalues of rho * rho_tilde, so for near-pure states its own
        # error is ~sqrt(eps): the comparison tolerance reflects that.
        rng = np.random.default_rng(6)
        for _ in range(100):
            rho = thermal_state(random_params(rng)).rho
            assert abs(concurrence(rho) - oracles.concurrence_eig(rho)) < 1e-7

    def test_pure_state_formula_on_ground_projectors(self):
        # T at the floor makes the Gibbs state an exact ground projector
        # whenever the gap is large enough to underflow the excited weights.
        rng = np.random.default_rng(0)
        checked = 0
        for _ in range(100):
            p = ModelParams(
                rng.uniform(0.0, 50.0), rng.uniform(0.5, 10.0),
                rng.uniform(0.5, 10.0), rng.uniform(0.5, 50.0), 1e-4,
            )
            state = thermal_state(p)
            if state.populations[1] > 0.0:
                continue
            checked += 1
            psi = state.eigen.vectors[:, 0]
            assert abs(concurrence(state.rho) - oracles.pure_concurrence(psi)) <= 1e-10
        assert checked > 50

    def test_unitality_and_bounds(self):
        assert concurrence(np.eye(4) / 4.0) == 0.0
        rng = np.random.default_rng(123)
        for _ in range(10_000):
            rec = evaluate_point(random_params(rng))
            assert 0.0 <= rec.concurrence <= 1.0


class TestEvaluatePoint:
    def test_diagonal_thermal_state_has_no_resources(self):
        rec = evaluate_point(ModelParams(0.0, 0.0, 0.0, 30.0, 0.1))
        assert rec.c_total == 0.0
        assert rec.c_local == 0.0
        assert rec.c_correlated == 0.0
        assert rec.concurrence == 0.0

    def test_cold_coulomb_dominated_point(self):
        # Near-Bell ground state, but the low-lying odd-parity level caps the
        # concurrence at the frozen oracle value (not at ~1).
        rec = evaluate_point(ModelParams(0.0, 2.0, 2.0, 30.0, 0.1))
        assert abs(rec.concurrence - 0.8604311577473229) < 1e-8
        assert rec.concurrence > 0.85

    def test_drive_dominated_point_is_nearly_separable(self):
        rec = evaluate_point(ModelParams(45.0, 2.0, 2.0, 30.0, 0.1))
        assert abs(rec.concurrence - 0.005772124892122427) < 1e-8
        assert rec.concurrence < 0.1

    def test_record_invariants(self):
        rng = np.random.default_rng(77)
        for _ in range(200):
            rec = evaluate_point(random_params(rng))
            assert abs(rec.c_total - (rec.c_local + rec.c_correlated)) <= 1e-10
            assert 0.0 <= rec.concurrence <= 1.0
            assert 0.0 <= rec.c_total <= 3.0 + 1e-12
            assert abs(sum(rec.populations) - 1.0) <= 1e-12

    def test_product_state_identity_at_zero_coulomb(self):
        # V = 0 makes H a sum of local terms, so the Gibbs state factorizes:
        # concurrence vanishes and the correlated coherence equals the
        # product of the local coherences.
        from dqdsim.model import reduce_subsystem

        rng = np.random.default_rng(55)
        for _ in range(50):
            p = ModelParams(
                rng.uniform(0.0, 50.0), rng.uniform(0.0, 10.0),
                rng.uniform(0.0, 10.0), 0.0, rng.uniform(0.05, 100.0),
            )
            rec = evaluate_point(p)
            rho = thermal_state(p).rho
            c_a = l1_coherence(reduce_subsystem(rho, "A"))
            c_b = l1_coherence(reduce_subsystem(rho, "B"))
            assert rec.concurrence <= 1e-10
            assert abs(rec.c_correlated - c_a * c_b) <= 1e-10
