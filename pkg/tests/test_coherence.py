import math

import numpy as np
import pytest
from conftest import random_monomial_unitary
from hypothesis import given, settings
from hypothesis import strategies as st

from cohdist.coherence import (
    basis_dependent_discord,
    c_re,
    dephase,
    qi_relative_entropy,
    relative_entropy,
    von_neumann_entropy,
    xlog2x,
)
from cohdist.linalg import kron
from cohdist.states import (
    DensityMatrix,
    bell_phi_plus,
    maximally_coherent_qubit,
    maximally_mixed,
    partial_trace,
    pure_state,
    random_density_matrix,
    random_zero_discord_spec,
    werner,
    zero_discord_state,
)


def test_xlog2x_values():
    assert xlog2x(0.0) == 0.0
    assert xlog2x(-3.0) == 0.0
    assert xlog2x(1.0) == 0.0
    assert xlog2x(2.0) == 2.0
    assert xlog2x(0.5) == -0.5


@settings(max_examples=80, derandomize=True)
@given(st.floats(0.0, 8.0, allow_nan=False))
def test_xlog2x_sign(x):
    if x <= 1.0:
        assert xlog2x(x) <= 0.0
    else:
        assert xlog2x(x) > 0.0


def test_entropy_of_named_states():
    assert von_neumann_entropy(pure_state([1.0, 1j])) == pytest.approx(0.0, abs=1e-12)
    assert von_neumann_entropy(bell_phi_plus()) == pytest.approx(0.0, abs=1e-12)
    for d in (2, 3, 4, 8):
        assert von_neumann_entropy(maximally_mixed(d)) == pytest.approx(math.log2(d), abs=1e-12)
    assert von_neumann_entropy(werner(0.5)) == pytest.approx(1.5487949406953987, abs=1e-9)


class TestRelativeEntropy:
    def test_zero_on_identical_states(self):
        rho = random_density_matrix(3, np.random.default_rng(2))
        assert relative_entropy(rho, rho) == pytest.approx(0.0, abs=1e-11)

    def test_pure_versus_mixed(self):
        assert relative_entropy(maximally_coherent_qubit(), maximally_mixed(2)) == pytest.approx(
            1.0, abs=1e-12
        )

    def test_disjoint_supports_are_infinite(self):
        zero = pure_state([1.0, 0.0])
        one = pure_state([0.0, 1.0])
        assert relative_entropy(zero, one) == math.inf

    def test_support_weight_threshold(self):
        """Weight below the sentinel threshold is ignored, above it diverges."""
        sigma = pure_state([1.0, 0.0])
        barely = DensityMatrix(np.diag([1.0 - 1e-12, 1e-12]))
        assert math.isfinite(relative_entropy(barely, sigma))
        leaky = DensityMatrix(np.diag([1.0 - 1e-6, 1e-6]))
        assert relative_entropy(leaky, sigma) == math.inf

    def test_nonnegative_on_random_pairs(self):
        rng = np.random.default_rng(14)
        for _ in range(20):
            rho = random_density_matrix(4, rng)
            sigma = random_density_matrix(4, rng)
            assert relative_entropy(rho, sigma) >= -1e-9

    def test_mutual_information_identity(self):
        # S(rho || rhoA x rhoB) == S(A) + S(B) - S(AB)
        rho = werner(0.5)
        marginals = DensityMatrix(
            kron(partial_trace(rho, 0).mat, partial_trace(rho, 1).mat), (2, 2)
        )
        want = (
            von_neumann_entropy(partial_trace(rho, 0))
            + von_neumann_entropy(partial_trace(rho, 1))
            - von_neumann_entropy(rho)
        )
        assert relative_entropy(rho, marginals) == pytest.approx(want, abs=1e-9)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            relative_entropy(maximally_mixed(2), maximally_mixed(3))


class TestDephase:
    def test_full_dephasing_keeps_only_the_diagonal(self):
        rho = random_density_matrix(4, np.random.default_rng(3), (2, 2))
        out = dephase(rho)
        assert np.array_equal(out.mat, np.diag(np.diag(rho.mat)))

    def test_single_subsystem_dephasing_keeps_matching_digits(self):
        # |+>_A x |0>_B carries only A-coherence; dephasing B leaves it intact
        rho = DensityMatrix(kron(maximally_coherent_qubit().mat, np.diag([1.0, 0.0])), (2, 2))
        assert np.array_equal(dephase(rho, (1,)).mat, rho.mat)
        assert dephase(rho).mat[0, 2] == 0.0

    def test_dephasing_b_zeroes_the_werner_corners(self):
        out = dephase(werner(0.7), (1,))
        assert np.array_equal(out.mat, np.diag(np.diag(werner(0.7).mat)))

    def test_idempotent_and_trace_preserving(self):
        rho = random_density_matrix(6, np.random.default_rng(4), (2, 3))
        once = dephase(rho, (0,))
        assert np.array_equal(dephase(once, (0,)).mat, once.mat)
        assert once.mat.trace() == rho.mat.trace()

    def test_no_targets_is_the_identity_map(self):
        rho = werner(0.2)
        assert np.array_equal(dephase(rho, ()).mat, rho.mat)

    def test_invalid_subsystem(self):
        with pytest.raises(ValueError, match="invalid subsystem"):
            dephase(werner(0.5), (2,))


def test_c_re_of_named_states():
    assert c_re(maximally_coherent_qubit()) == pytest.approx(1.0, abs=1e-12)
    assert c_re(maximally_mixed(2)) == pytest.approx(0.0, abs=1e-12)
    assert c_re(pure_state([1.0, 0.0])) == pytest.approx(0.0, abs=1e-12)
    # dephasing the Bell state leaves diag(1/2, 0, 0, 1/2)
    assert c_re(bell_phi_plus()) == pytest.approx(1.0, abs=1e-9)


def test_c_re_equals_relative_entropy_to_the_dephased_state():
    rng = np.random.default_rng(21)
    for _ in range(25):
        rho = random_density_matrix(2, rng)
        assert abs(c_re(rho) - relative_entropy(rho, dephase(rho))) < 1e-9
        rho2 = random_density_matrix(4, rng, (2, 2))
        assert abs(c_re(rho2) - relative_entropy(rho2, dephase(rho2))) < 1e-9


def test_c_re_is_invariant_under_monomial_unitaries():
    rng = np.random.default_rng(22)
    for _ in range(25):
        for dim, dims in ((2, (2,)), (4, (2, 2))):
            rho = random_density_matrix(dim, rng, dims)
            u = random_monomial_unitary(rng, dim)
            rotated = DensityMatrix(u @ rho.mat @ u.conj().T, dims)
            assert abs(c_re(rotated) - c_re(rho)) < 1e-9


class TestQiRelativeEntropy:
    def test_requires_bipartite_input(self):
        with pytest.raises(ValueError, match="bipartite"):
            qi_relative_entropy(maximally_mixed(4))

    def test_werner_value(self):
        assert qi_relative_entropy(werner(0.5)) == pytest.approx(0.2624831837637338, abs=1e-9)
        assert qi_relative_entropy(werner(0.0)) == pytest.approx(0.0, abs=1e-12)
        assert qi_relative_entropy(werner(1.0)) == pytest.approx(1.0, abs=1e-9)

    def test_dominates_the_marginal_coherence(self):
        rng = np.random.default_rng(31)
        for dims in ((2, 2), (2, 3)):
            for _ in range(15):
                rho = random_density_matrix(dims[0] * dims[1], rng, dims)
                assert qi_relative_entropy(rho) >= c_re(partial_trace(rho, 1)) - 1e-9


class TestBasisDependentDiscord:
    def test_both_routes_agree_on_random_full_rank_states(self):
        rng = np.random.default_rng(40)
        for dims in ((2, 2), (2, 3)):
            for _ in range(10):
                rho = random_density_matrix(dims[0] * dims[1], rng, dims)
                basis_dependent_discord(rho, check=True)  # raises on disagreement

    def test_route_disagreement_raises(self, monkeypatch):
        from cohdist import coherence

        monkeypatch.setattr(
            coherence, "_discord_via_relative_entropies", lambda rho, tol: 123.0
        )
        with pytest.raises(ArithmeticError, match="disagree"):
            basis_dependent_discord(werner(0.5), check=True)

    def test_werner_discord_equals_qi(self):
        # Bob's marginal is maximally mixed, so the marginal coherence is zero
        for p in (0.1, 0.5, 0.9):
            rho = werner(p)
            assert basis_dependent_discord(rho) == pytest.approx(
                qi_relative_entropy(rho), abs=1e-12
            )

    def test_zero_for_block_distinguishable_mixtures(self):
        rng = np.random.default_rng(41)
        for _ in range(10):
            state = zero_discord_state(random_zero_discord_spec(rng, 2, 3))
            assert abs(basis_dependent_discord(state, check=True)) < 1e-9

    def test_frozen_random_state_values(self):
        rho = random_density_matrix(4, np.random.default_rng(42), (2, 2))
        assert qi_relative_entropy(rho) == pytest.approx(0.16354513343952748, abs=1e-9)
        assert c_re(partial_trace(rho, 1)) == pytest.approx(0.054082060166928625, abs=1e-9)
        assert basis_dependent_discord(rho) == pytest.approx(0.10946307327259885, abs=1e-9)
