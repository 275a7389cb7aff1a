"""Truncated Fock oracle: generators, unitarity, fidelity cross-checks."""

import math

import numpy as np
import pytest
from scipy.sparse.linalg import expm_multiply

import cvcloner.fock as fock
from cvcloner.circuits import asym_direct
from cvcloner.fock import (
    FockSpace,
    FockState,
    TruncationError,
    apply_cloning_fock,
    cloning_unitary_fock,
    coherent_fock,
    fidelity_fock,
    mixing_generator,
    mode_expectation,
    photon_distribution,
    reduced_density_matrix,
    squeezing_generator,
    unitarity_block_deviation,
)


def test_space_enforces_budget_and_cutoff():
    with pytest.raises(ValueError):
        FockSpace(3, 60)  # 61^3 > 2e5
    with pytest.raises(ValueError):
        FockSpace(2, 0)
    with pytest.raises(ValueError):
        FockSpace(0, 5)
    assert FockSpace(3, 14).dim == 15 ** 3


def test_mixing_generator_single_photon_element():
    # basis |n0 n1>, index 2*n0 + n1 at cutoff 1: <10| G |01> = i
    space = FockSpace(2, 1)
    g = mixing_generator(space, (0, 1))
    assert g[2, 1] == 1j
    assert g[1, 2] == -1j


def test_squeezing_generator_acts_on_vacuum_as_pair_creation():
    space = FockSpace(2, 1)
    g = squeezing_generator(space, (0, 1))
    column = g[:, 0]
    expected = np.zeros(4, dtype=complex)
    expected[3] = -1j  # -i |11>
    assert np.allclose(column, expected)


def test_generators_are_hermitian():
    space = FockSpace(2, 7)
    for g in (mixing_generator(space, (0, 1)), squeezing_generator(space, (0, 1))):
        assert np.abs(g - g.conj().T).max() <= 1e-12


def test_generator_exponentials_reproduce_gaussian_elements():
    # a beam splitter angle transfers |1,0> -> cos(th)|1,0> - sin(th)|0,1>
    space = FockSpace(2, 3)
    th = 0.6
    k = -1j * th * mixing_generator(space, (0, 1))
    u = fock.expm(k)
    one_zero = np.zeros(space.dim)
    one_zero[1 * 4] = 1.0
    out = u @ one_zero
    assert np.isclose(abs(out[4]) ** 2, math.cos(th) ** 2, atol=1e-12)
    assert np.isclose(abs(out[1]) ** 2, math.sin(th) ** 2, atol=1e-12)


def test_cloning_unitary_is_real_orthogonal():
    space = FockSpace(3, 6)
    u = cloning_unitary_fock(0.3, space)
    assert u.dtype == np.float64
    assert np.abs(u @ u.T - np.eye(space.dim)).max() < 1e-12


def test_cloning_unitary_low_photon_block_is_unitary():
    space = FockSpace(3, 8)
    u = cloning_unitary_fock(0.2, space)
    assert unitarity_block_deviation(u, space, 4) <= 1e-6


def test_chi_zero_reduces_to_the_fixed_factor():
    space = FockSpace(3, 5)
    gamma = -0.5 * math.log(2.0)  # chi = gamma + ln(2)/2 = 0
    u = cloning_unitary_fock(gamma, space)
    fixed = fock._fixed_orthogonal(space.cutoff, space.budget)
    assert np.abs(u - fixed).max() < 1e-13


def test_matrix_and_krylov_paths_agree():
    space = FockSpace(3, 6)
    psi = coherent_fock(space, [0j, 0j, 0.4 + 0.1j])
    via_matrix = cloning_unitary_fock(0.25, space) @ psi.amplitudes
    via_krylov = apply_cloning_fock(0.25, psi).amplitudes
    assert np.abs(via_matrix - via_krylov).max() < 1e-10


def test_evolution_preserves_norm():
    space = FockSpace(3, 10)
    out = apply_cloning_fock(0.4, coherent_fock(space, [0j, 0j, 0.3 + 0j]))
    assert abs(out.norm - 1.0) < 1e-8


def test_coherent_state_is_nearly_normalized_and_poissonian():
    space = FockSpace(2, 12)
    xi = 0.7 - 0.2j
    state = coherent_fock(space, [xi, 0j])
    assert abs(state.norm - 1.0) < 1e-9
    dist = photon_distribution(state, 0)
    mean_n = float(np.arange(13) @ dist)
    assert np.isclose(mean_n, abs(xi) ** 2, atol=1e-9)
    assert np.isclose(photon_distribution(state, 1)[0], 1.0, atol=1e-12)


def test_fidelity_of_unevolved_vacuum_is_one():
    space = FockSpace(3, 4)
    state = coherent_fock(space, [0j, 0j, 0j])
    assert np.isclose(fidelity_fock(state, 0, 0j), 1.0, atol=1e-14)


def test_two_mode_squeezed_vacuum_thermal_overlap():
    # reduced state of a two-mode squeezed vacuum is thermal with
    # n = sinh^2 r, so its vacuum overlap must be 1/cosh^2 r
    space = FockSpace(2, 20)
    r = 0.4
    vac = np.zeros(space.dim, dtype=complex)
    vac[0] = 1.0
    flow = fock._squeeze_flow(space, (0, 1))
    state = FockState(space, expm_multiply(r * flow, vac))
    got = fidelity_fock(state, 0, 0j)
    assert np.isclose(got, 1 / math.cosh(r) ** 2, atol=1e-10)


def test_truncated_coherent_overlap_gate():
    space = FockSpace(2, 6)
    state = coherent_fock(space, [0j, 0j])
    with pytest.raises(TruncationError):
        fidelity_fock(state, 0, 4.0 + 0j)


def test_leakage_gate_trips_on_undersized_cutoff():
    space = FockSpace(3, 3)
    out = apply_cloning_fock(1.5, coherent_fock(space, [0j, 0j, 0.5 + 0j]))
    with pytest.raises(TruncationError):
        fidelity_fock(out, 0, 0.5 + 0j)


def test_symmetric_point_fidelity_converges_to_two_thirds():
    space = FockSpace(3, 12)
    out = apply_cloning_fock(0.0, coherent_fock(space, [0j, 0j, 0.5 + 0j]))
    assert abs(fidelity_fock(out, 0, 0.5) - 2 / 3) < 2e-3
    assert abs(fidelity_fock(out, 2, 0.5) - 2 / 3) < 2e-3


def test_asymmetric_point_fidelities_converge():
    space = FockSpace(3, 14)
    out = apply_cloning_fock(0.5, coherent_fock(space, [0j, 0j, 0.5 + 0j]))
    assert abs(fidelity_fock(out, 0, 0.5) - 2 / (math.e + 2)) < 5e-3
    assert abs(fidelity_fock(out, 2, 0.5) - 2 / (math.exp(-1) + 2)) < 5e-3


def test_heisenberg_means_match_the_transform_picture():
    gamma, xi = 0.3, 0.4 + 0.15j
    space = FockSpace(3, 14)
    out = apply_cloning_fock(gamma, coherent_fock(space, [0j, 0j, xi]))
    t = asym_direct(gamma)
    for mode in range(3):
        want = t.A[mode, 2] * xi + t.B[mode, 2] * np.conj(xi)
        assert abs(mode_expectation(out, mode) - want) < 2e-3


def test_reduced_density_matrix_traces_to_norm():
    space = FockSpace(3, 6)
    out = apply_cloning_fock(0.2, coherent_fock(space, [0j, 0j, 0.3 + 0j]))
    for mode in range(3):
        rho = reduced_density_matrix(out, mode)
        assert np.isclose(np.trace(rho).real, 1.0, atol=1e-10)
        assert np.abs(rho - rho.conj().T).max() < 1e-12


def test_state_vector_shape_validation():
    space = FockSpace(2, 3)
    with pytest.raises(ValueError):
        FockState(space, np.zeros(5, dtype=complex))
