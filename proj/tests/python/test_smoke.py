"""Smoke tests for the compiled python module."""

import math

import numpy as np
import pytest

import suncs


def test_pauli_matrices():
    gens = suncs.lambda_set(2)
    assert [label for label, _ in gens] == ["theta^1_2", "beta^1_2", "eta^1_1"]
    sigma1 = np.array([[0, 1], [1, 0]], dtype=complex)
    sigma3 = np.array([[1, 0], [0, -1]], dtype=complex)
    assert np.allclose(gens[0][1], sigma1)
    assert np.allclose(gens[2][1], sigma3)
    assert suncs.beta_theta_commutator_deviation(4) < 1e-12


def test_primed_lambda():
    assert np.allclose(suncs.primed_lambda(4, 15), np.diag([0, 0, 1, -1]).astype(complex))


def test_fundamental_state_norm_and_values():
    xi = [0.4, 1.0]
    phi = [0.3, 1.7, 2.9]
    state = suncs.coherent_state_fund(xi, phi)
    assert abs(np.linalg.norm(state) - 1.0) < 1e-14
    assert state[0] == pytest.approx(math.cos(0.4) * np.exp(0.3j), abs=1e-14)


def test_decompose_round_trip():
    u = suncs.haar_random_su(5, seed=42)
    tree = suncs.decompose(u)
    assert "left" in tree and "right" in tree
    rebuilt = suncs.build_group_element(tree)
    assert np.max(np.abs(rebuilt - u)) < 1e-10


def test_rep_state_matches_oracle():
    xi = [0.5, 0.9]
    phi = [0.1, 1.2, 2.3]
    direct = suncs.coherent_state(3, 4, xi, phi)
    oracle = suncs.tensor_power_oracle(3, 4, xi, phi)
    assert np.max(np.abs(direct - oracle)) < 1e-12
    phase0, zetas = suncs.angles_to_stereo(xi, phi)
    stereo = suncs.stereographic_state(3, 4, phase0, zetas)
    assert np.max(np.abs(direct - stereo)) < 1e-12


def test_displacement_lambda():
    xi = [0.4, 0.9]
    phi = [1.3, 2.1, 5.0]
    disp = suncs.displacement_lambda(3, xi, phi)
    state = suncs.coherent_state_fund(xi, phi)
    assert np.max(np.abs(disp[:, 0] - state)) < 1e-12


def test_overlap_closed_form():
    xi_a, phi_a = [0.3, 0.8], [0.1, 1.2, 2.3]
    xi_b, phi_b = [1.1, 0.4], [2.2, 0.7, 3.9]
    closed = suncs.overlap_closed(xi_a, phi_a, xi_b, phi_b, 3)
    bra = np.conj(suncs.coherent_state(3, 3, xi_a, phi_a))
    ket = suncs.coherent_state(3, 3, xi_b, phi_b)
    assert abs(closed - bra @ ket) < 1e-13


def test_sparse_operators():
    op = suncs.raising_op(2, 2, 1, 2)
    dense = op.todense()
    assert op.dim == 3
    assert np.allclose(dense.conj().T, suncs.lowering_op(2, 2, 2, 1).todense())
    lifted = suncs.lift_generator(2, 2, np.eye(2, dtype=complex))
    assert np.allclose(lifted.todense(), 2.0 * np.eye(3))
    basis = suncs.basis_states(3, 2)
    assert basis[0] == [2, 0, 0]
    assert len(basis) == 6


def test_volume_and_unity():
    assert suncs.coset_volume(4) == pytest.approx((2 * math.pi) ** 4 / 48, abs=1e-10)
    matrix, deviation, prefactor, sufficient = suncs.resolution_of_unity(2, 2)
    assert sufficient
    assert deviation < 1e-10
    assert matrix.shape == (3, 3)


def test_invariant_suite_passes():
    results = suncs.run_checks(n=3, N=2, seed=7)
    failed = [name for name, dev, tol, ok in results if not ok]
    assert failed == []
