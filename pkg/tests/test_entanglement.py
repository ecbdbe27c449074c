import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinqpt.entanglement import (
    DegenerateGroundStateError,
    density_from_pure,
    ground_state_entropy,
    partial_trace,
    reduced_density,
    state_entropy,
    von_neumann_entropy,
)
from spinqpt.linalg import DimensionError
from spinqpt.model import ModelParams, closed_form_state_high_field, closed_form_state_low_field
from spinqpt.states import DensityMatrix, PureState, StateError

LIMIT = math.log2(3) - 2 / 3  # entropy of diag(1/3, 2/3)


def haar_state(rng, da, db):
    v = rng.normal(size=da * db) + 1j * rng.normal(size=da * db)
    return PureState.normalized(v, da, db)


def haar_unitary(rng, n):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def schmidt_entropy(state):
    """Independent route: squared singular values of the amplitude matrix."""
    sv = np.linalg.svd(state.amplitudes.reshape(state.dim_a, state.dim_b), compute_uv=False)
    p = sv[sv > 1e-15] ** 2
    return float(-np.sum(p * np.log2(p)))


# --- types -------------------------------------------------------------------

def test_pure_state_validation():
    with pytest.raises(StateError):
        PureState(np.ones(6), 2, 3)
    with pytest.raises(StateError):
        PureState(np.ones(5) / math.sqrt(5), 2, 3)
    with pytest.raises(StateError):
        PureState.normalized(np.zeros(6), 2, 3)


def test_density_matrix_validation():
    with pytest.raises(StateError):
        DensityMatrix(np.eye(2))
    with pytest.raises(StateError):
        DensityMatrix(np.array([[0.5, 0.5], [0.0, 0.5]]))


# --- density_from_pure ----------------------------------------------------------

def test_density_of_basis_state():
    rho = density_from_pure(PureState(np.eye(6)[0], 2, 3))
    expected = np.zeros((6, 6))
    expected[0, 0] = 1
    np.testing.assert_array_equal(rho.matrix, expected)


def test_density_of_uniform_superposition():
    rho = density_from_pure(PureState(np.array([1, 1]) / math.sqrt(2), 2, 1))
    np.testing.assert_allclose(rho.matrix, np.full((2, 2), 0.5), atol=1e-15)


def test_density_of_product_state_is_pure():
    rho = density_from_pure(closed_form_state_high_field())
    assert np.trace(rho.matrix).real == pytest.approx(1.0, abs=1e-14)
    assert rho.purity() == pytest.approx(1.0, abs=1e-14)


# --- partial_trace -------------------------------------------------------------

def test_partial_trace_product_basis_state():
    amps = np.kron([1, 0], [0, 1, 0])
    rho_a = reduced_density(PureState(amps, 2, 3))
    np.testing.assert_array_equal(rho_a.matrix, np.diag([1, 0]))


def test_partial_trace_x_polarized_product():
    rho_a = reduced_density(closed_form_state_high_field(), keep="A")
    np.testing.assert_allclose(rho_a.matrix, np.full((2, 2), 0.5), atol=1e-15)
    rho_b = reduced_density(closed_form_state_high_field(), keep="B")
    v = np.array([1, math.sqrt(2), 1]) / 2
    np.testing.assert_allclose(rho_b.matrix, np.outer(v, v), atol=1e-15)


def test_partial_trace_reproduces_coefficient_formula(rng):
    a = rng.normal(size=6)
    state = PureState.normalized(a, 2, 3)
    a = state.amplitudes.real
    expected = np.array(
        [
            [a[0] ** 2 + a[1] ** 2 + a[2] ** 2, a[0] * a[3] + a[1] * a[4] + a[2] * a[5]],
            [a[0] * a[3] + a[1] * a[4] + a[2] * a[5], a[3] ** 2 + a[4] ** 2 + a[5] ** 2],
        ]
    )
    np.testing.assert_allclose(reduced_density(state).matrix, expected, atol=1e-15)


def test_partial_trace_against_loop(rng):
    state = haar_state(rng, 3, 4)
    rho = density_from_pure(state).matrix
    ra = np.zeros((3, 3), complex)
    rb = np.zeros((4, 4), complex)
    for i in range(3):
        for ip in range(3):
            ra[i, ip] = sum(rho[i * 4 + k, ip * 4 + k] for k in range(4))
    for k in range(4):
        for kp in range(4):
            rb[k, kp] = sum(rho[i * 4 + k, i * 4 + kp] for i in range(3))
    np.testing.assert_allclose(reduced_density(state, "A").matrix, ra, atol=1e-15)
    np.testing.assert_allclose(reduced_density(state, "b").matrix, rb, atol=1e-15)


def test_partial_trace_at_b_equals_j_is_maximally_mixed():
    rho_a = reduced_density(closed_form_state_low_field(1.0, 1.0).normalized)
    np.testing.assert_allclose(rho_a.matrix, 0.5 * np.eye(2), atol=1e-10)


def test_partial_trace_errors():
    rho = density_from_pure(closed_form_state_high_field())
    with pytest.raises(DimensionError):
        partial_trace(rho, 2, 2)
    with pytest.raises(ValueError):
        partial_trace(rho, 2, 3, keep="C")


# --- von_neumann_entropy ----------------------------------------------------------

def test_entropy_examples():
    assert von_neumann_entropy(density_from_pure(closed_form_state_high_field())) == pytest.approx(0, abs=1e-12)
    assert von_neumann_entropy(DensityMatrix(0.5 * np.eye(2))) == pytest.approx(1.0, abs=1e-15)
    assert von_neumann_entropy(DensityMatrix(np.diag([1 / 3, 2 / 3]))) == pytest.approx(0.918296, abs=1e-6)
    assert von_neumann_entropy(DensityMatrix(np.diag([1 / 3, 2 / 3]))) == pytest.approx(LIMIT, abs=1e-14)


def test_entropy_clamps_tiny_negative_eigenvalues():
    assert von_neumann_entropy(DensityMatrix(np.diag([1 + 5e-11, -5e-11]))) == 0.0


def test_entropy_rejects_negative_eigenvalues():
    with pytest.raises(StateError):
        von_neumann_entropy(DensityMatrix(np.diag([1.1, -0.1])))
    with pytest.raises(StateError):
        von_neumann_entropy(DensityMatrix(np.diag([1 + 1e-7, -1e-7])))


@settings(max_examples=50, deadline=None)
@given(p=st.lists(st.floats(0, 1), min_size=1, max_size=6).filter(lambda x: sum(x) > 1e-3))
def test_entropy_bounds(p):
    p = np.array(p) / sum(p)
    s = von_neumann_entropy(DensityMatrix(np.diag(p)))
    assert 0 <= s <= math.log2(len(p))
    nz = p[p > 0]
    assert s == pytest.approx(float(-np.sum(nz * np.log2(nz))), abs=1e-12)


# --- properties ----------------------------------------------------------------

@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), dims=st.sampled_from([(2, 3), (3, 4)]))
def test_schmidt_symmetry(seed, dims):
    state = haar_state(np.random.default_rng(seed), *dims)
    sa, sb = state_entropy(state, "A"), state_entropy(state, "B")
    assert abs(sa - sb) <= 1e-10
    assert abs(sa - schmidt_entropy(state)) <= 1e-10


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), dims=st.sampled_from([(2, 3), (3, 4), (2, 2)]))
def test_local_unitary_invariance(seed, dims):
    rng = np.random.default_rng(seed)
    state = haar_state(rng, *dims)
    u = np.kron(haar_unitary(rng, dims[0]), haar_unitary(rng, dims[1]))
    moved = PureState.normalized(u @ state.amplitudes, *dims)
    assert abs(state_entropy(state) - state_entropy(moved)) <= 1e-10


# --- ground_state_entropy --------------------------------------------------------

def test_ground_entropy_product_phase():
    assert ground_state_entropy(ModelParams(1.0, 3.0)) == pytest.approx(0.0, abs=1e-10)


def test_ground_entropy_peak_value():
    assert ground_state_entropy(ModelParams(1.0, 1.0)) == pytest.approx(1.0, abs=1e-12)


def test_ground_entropy_low_field_limit():
    assert ground_state_entropy(ModelParams(1.0, 1e-3)) == pytest.approx(LIMIT, abs=1e-3)


@pytest.mark.parametrize("b", [0.0, 2.0])
def test_ground_entropy_refuses_degenerate_levels(b):
    with pytest.raises(DegenerateGroundStateError) as info:
        ground_state_entropy(ModelParams(1.0, b))
    assert len(info.value.entropies) == 2
    assert info.value.gap < 1e-10


def test_degenerate_candidates_at_crossing():
    with pytest.raises(DegenerateGroundStateError) as info:
        ground_state_entropy(ModelParams(1.0, 2.0))
    # the two branches meeting at b = 2j carry ~0.918 and 0 bits (up to basis mixing)
    assert all(0 <= s <= 1 for s in info.value.entropies)


@pytest.mark.parametrize("b", np.linspace(0.05, 1.95, 20))
def test_reduced_diagonal_is_half_in_entangled_phase(b):
    from spinqpt.model import diagonalize

    v = diagonalize(ModelParams(1.0, b)).eigenvectors[:, 0]
    rho_a = reduced_density(PureState.normalized(v, 2, 3))
    np.testing.assert_allclose(np.diag(rho_a.matrix).real, [0.5, 0.5], atol=1e-10)


@pytest.mark.parametrize("b", np.linspace(2.0 + 1e-6, 12.0, 20))
def test_entropy_vanishes_beyond_crossing(b):
    assert ground_state_entropy(ModelParams(1.0, b)) <= 1e-10


@pytest.mark.parametrize("j", [0.5, 1.0, 3.0])
def test_entropy_not_monotonic(j):
    s = lambda x: ground_state_entropy(ModelParams(j, x * j))  # noqa: E731
    assert s(0.5) < s(1.0)
    assert s(1.5) < s(1.0)


@pytest.mark.parametrize("b", np.linspace(0.05, 1.95, 15))
def test_pipeline_matches_closed_form_entropy(b):
    cf = closed_form_state_low_field(1.0, b)
    assert abs(ground_state_entropy(ModelParams(1.0, b)) - state_entropy(cf.normalized)) <= 1e-9
