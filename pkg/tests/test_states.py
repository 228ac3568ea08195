import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import dickekit as dk


def test_dicke_zero_excitations_is_ground():
    state = dk.dicke_state(3, 0)
    assert state.amplitudes[0] == pytest.approx(1.0)
    assert np.count_nonzero(state.amplitudes) == 1


def test_dicke_single_excitation_two_qubits():
    state = dk.dicke_state(2, 1)
    assert np.allclose(state.amplitudes, [0, 2 ** -0.5, 2 ** -0.5, 0])


def test_dicke_half_excited_four_qubits():
    state = dk.dicke_state(4, 2)
    nonzero = state.amplitudes[state.amplitudes != 0]
    assert len(nonzero) == 6
    assert np.allclose(nonzero, 6 ** -0.5)


@pytest.mark.parametrize("n,m", [(3, -1), (3, 4), (0, 0), (13, 2)])
def test_dicke_domain_errors(n, m):
    with pytest.raises(dk.DomainError):
        dk.dicke_state(n, m)


def test_dicke_oversize_error_names_the_limit():
    with pytest.raises(dk.DomainError, match="12"):
        dk.dicke_state(13, 2)


def test_dicke_amplitude_equality_exhaustive():
    # permutation invariance, spelled out: every basis label with m excitations
    # carries the same weight, all others none
    from math import comb

    for n in range(1, 9):
        for m in range(n + 1):
            amps = dk.dicke_state(n, m).amplitudes
            excited = np.array([bin(i).count("1") for i in range(2 ** n)]) == m
            assert np.allclose(amps[excited], comb(n, m) ** -0.5, atol=1e-14)
            assert np.all(amps[~excited] == 0)


@settings(deadline=None, max_examples=40)
@given(st.data())
def test_dicke_permutation_invariance(data):
    n = data.draw(st.integers(2, 8))
    m = data.draw(st.integers(0, n))
    perm = data.draw(st.permutations(range(n)))
    state = dk.dicke_state(n, m)
    permuted = state.amplitudes.reshape([2] * n).transpose(perm).reshape(-1)
    assert np.allclose(permuted, state.amplitudes, atol=1e-12)


def test_pure_state_must_be_normalized():
    with pytest.raises(dk.DomainError):
        dk.PureState(1, [1.0, 1.0])
    with pytest.raises(dk.DomainError):
        dk.PureState(2, [1.0, 0.0])  # wrong length


def test_product_state_orders_first_factor_as_msb():
    state = dk.product_state([[0, 1], [1, 0]])  # |1> (x) |0>
    assert state.amplitudes[0b10] == pytest.approx(1.0)


def test_psixy_single_qubit():
    state = dk.psixy_state(1, 0.0)
    assert np.allclose(state.amplitudes, [2 ** -0.5, 2 ** -0.5])


def test_psixy_phase_shows_in_jy():
    state = dk.psixy_state(2, np.pi / 2)
    assert dk.expectation(state, "y") == pytest.approx(1.0, abs=1e-12)


def test_white_noise_endpoints():
    target = dk.dicke_state(4, 2)
    pure = dk.white_noise_mix(target, 0.0)
    assert np.allclose(pure.matrix, np.outer(target.amplitudes, target.amplitudes.conj()))
    mixed = dk.white_noise_mix(target, 1.0)
    assert np.allclose(np.diag(mixed.matrix), 1 / 16)
    assert np.allclose(mixed.matrix, np.diag(np.diag(mixed.matrix)))


def test_white_noise_fidelity_value():
    target = dk.dicke_state(4, 2)
    rho = dk.white_noise_mix(target, 0.3)
    fid = np.vdot(target.amplitudes, rho.matrix @ target.amplitudes).real
    assert fid == pytest.approx(0.3 / 16 + 0.7, abs=1e-12)


@pytest.mark.parametrize("p", [-0.1, 1.1])
def test_white_noise_p_range(p):
    with pytest.raises(dk.DomainError):
        dk.white_noise_mix(dk.dicke_state(2, 1), p)


def test_psixy_noise_endpoints_and_errors():
    proj_dicke = dk.psixy_noise_mix(2, 0.0)
    target = dk.dicke_state(2, 1).amplitudes
    assert np.allclose(proj_dicke.matrix, np.outer(target, target.conj()))
    proj_sep = dk.psixy_noise_mix(2, 1.0, 0.0)
    plus = dk.psixy_state(2, 0.0).amplitudes
    assert np.allclose(proj_sep.matrix, np.outer(plus, plus.conj()))
    with pytest.raises(dk.DomainError):
        dk.psixy_noise_mix(3, 0.5)


def test_psixy_noise_stays_above_separable_bound():
    # the coherent admixture barely lowers the planar moments
    rho = dk.psixy_noise_mix(4, 0.5)
    value = dk.expectation(rho, dk.QuadraticForm(a=(1, 1, 0)))
    assert value == pytest.approx(5.5, abs=1e-10)
    assert value > 5.0


def test_density_matrix_validation():
    with pytest.raises(dk.DomainError):
        dk.DensityMatrix(1, [[0.5, 0.5j], [0.5j, 0.5]])  # not Hermitian
    with pytest.raises(dk.DomainError):
        dk.DensityMatrix(1, [[1.0, 0], [0, 1.0]])  # trace 2
    with pytest.raises(dk.DomainError):
        dk.DensityMatrix(1, [[1.5, 0], [0, -0.5]])  # negative eigenvalue


def test_symmetric_embedding_matches_dense_dicke():
    for n in range(1, 7):
        for m in range(n + 1):
            dense = dk.symmetric_to_dense(dk.dicke_symmetric(n, m))
            assert np.allclose(dense.amplitudes, dk.dicke_state(n, m).amplitudes, atol=1e-12)


def test_psixy_symmetric_matches_dense():
    n, phi = 6, 0.4
    dense = dk.psixy_state(n, phi)
    embedded = dk.symmetric_to_dense(dk.psixy_symmetric(n, phi))
    assert np.allclose(dense.amplitudes, embedded.amplitudes, atol=1e-12)


def test_symmetric_norm_enforced():
    with pytest.raises(dk.DomainError):
        dk.SymmetricState(2, [1.0, 1.0, 0.0])


@pytest.mark.parametrize("side", [(), (1, 2, 3), (0,), (4,), (1, 1)])
def test_bipartition_validation(side):
    with pytest.raises(dk.DomainError):
        dk.Bipartition(3, side)


def test_schmidt_examples():
    state = dk.dicke_state(4, 2)
    spec = dk.schmidt_spectrum(state, dk.Bipartition(4, (1, 2)))
    assert np.allclose(spec.squared_coefficients, [2 / 3, 1 / 6, 1 / 6], atol=1e-12)
    spec = dk.schmidt_spectrum(state, dk.Bipartition(4, (1,)))
    assert np.allclose(spec.squared_coefficients, [0.5, 0.5], atol=1e-12)
    ground = dk.dicke_state(4, 0)
    spec = dk.schmidt_spectrum(ground, dk.Bipartition(4, (2, 3)))
    assert np.allclose(spec.squared_coefficients, [1.0], atol=1e-12)


def test_schmidt_closed_form_all_splits():
    for n in range(2, 9):
        state_cache = {m: dk.dicke_state(n, m) for m in range(n + 1)}
        for m in range(n + 1):
            for n1 in range(1, n // 2 + 1):
                numeric = dk.schmidt_spectrum(
                    state_cache[m], dk.Bipartition(n, tuple(range(1, n1 + 1)))
                ).squared_coefficients
                closed = dk.dicke_schmidt_squared(n, m, n1)
                closed = closed[closed > 1e-14]
                assert np.allclose(numeric, closed, atol=1e-10), (n, m, n1)


def test_schmidt_split_only_size_matters_for_dicke():
    state = dk.dicke_state(5, 2)
    a = dk.schmidt_spectrum(state, dk.Bipartition(5, (2, 4))).squared_coefficients
    b = dk.schmidt_spectrum(state, dk.Bipartition(5, (1, 2))).squared_coefficients
    assert np.allclose(a, b, atol=1e-12)


@settings(deadline=None, max_examples=30)
@given(seed=st.integers(0, 10 ** 6), n=st.integers(2, 6))
def test_schmidt_sums_to_one_on_random_states(seed, n):
    state = next(dk.sample_random_states("pure", n, 1, seed=seed))
    split = dk.Bipartition(n, (1,))
    spec = dk.schmidt_spectrum(state, split)
    assert spec.squared_coefficients.sum() == pytest.approx(1.0, abs=1e-10)


@settings(deadline=None, max_examples=20)
@given(seed=st.integers(0, 10 ** 6))
def test_product_states_have_rank_one_splits(seed):
    state = next(dk.sample_random_states("product", 4, 1, seed=seed))
    for n1 in (1, 2):
        spec = dk.schmidt_spectrum(state, dk.Bipartition(4, tuple(range(1, n1 + 1))))
        assert spec.largest == pytest.approx(1.0, abs=1e-10)


def test_assemble_bipartite_interleaves_qubits():
    # |1> on qubit 2, |0> elsewhere, via split {2} | {1,3}
    split = dk.Bipartition(3, (2,))
    state = dk.assemble_bipartite(np.array([0, 1.0]), np.array([1.0, 0, 0, 0]), split)
    assert state.amplitudes[0b010] == pytest.approx(1.0)
