import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_state, close
from oracles import partial_trace_loops
from relent.errors import InvalidPartitionError
from relent.states import compose_total, momentum_state, spin_state, BellPsi
from relent.tensor import (
    basis_state,
    density_matrix,
    is_density_matrix,
    linear_entropy,
    partial_trace,
    reduced_density,
    tensor_product,
)

SUBSETS = [s for r in (1, 2, 3) for s in itertools.combinations(range(4), r)]


def test_identity_tensor_identity():
    assert np.array_equal(tensor_product(np.eye(2), np.eye(2)), np.eye(4))


def test_basis_bookkeeping():
    psi = tensor_product(basis_state([1]), basis_state([0]))
    assert psi.shape == (4,)
    assert psi[2] == 1 and np.count_nonzero(psi) == 1
    assert np.array_equal(basis_state([1, 0, 1, 1]), np.eye(16)[8 + 2 + 1])


def test_bell_superposition_norm():
    psi = (tensor_product(basis_state([1]), basis_state([0])) + tensor_product(basis_state([0]), basis_state([1])))
    psi = psi / np.sqrt(2)
    assert abs(np.linalg.norm(psi) - 1) < 1e-15


def test_product_state_reduces_to_factor(rng):
    a, b = random_state(rng, 1), random_state(rng, 3)
    rho = density_matrix(tensor_product(a, b))
    assert close(partial_trace(rho, [0]), np.outer(a, a.conj()), atol=1e-12)
    assert abs(linear_entropy(partial_trace(rho, [0]))) < 1e-12


def test_bell_pair_reduces_to_half_identity():
    psi = (basis_state([0, 1]) + basis_state([1, 0])) / np.sqrt(2)
    assert close(partial_trace(density_matrix(psi), [0]), np.eye(2) / 2, atol=1e-15)


def test_maximal_total_state_keep_momentum_a():
    psi = compose_total(momentum_state(np.pi / 4), spin_state(BellPsi(np.pi / 4)))
    rho = density_matrix(psi)
    expected = partial_trace_loops(rho, [0])
    assert close(expected, np.eye(2) / 2, atol=1e-15)
    assert close(partial_trace(rho, [0]), expected, atol=1e-15)


@pytest.mark.parametrize("keep", SUBSETS)
def test_partial_trace_matches_loop_oracle(keep, rng):
    rho = density_matrix(random_state(rng, 4))
    out = partial_trace(rho, keep)
    assert out.shape == (2 ** len(keep),) * 2
    assert close(out, partial_trace_loops(rho, keep), atol=1e-13)


@pytest.mark.parametrize("keep", SUBSETS)
def test_reduced_density_equals_partial_trace(keep, rng):
    psi = random_state(rng, 4)
    assert close(reduced_density(psi, keep), partial_trace(density_matrix(psi), keep), atol=1e-13)


def test_partial_trace_of_mixed_state(rng):
    rho = sum(w * density_matrix(random_state(rng, 4)) for w in (0.2, 0.3, 0.5))
    for keep in ([1], [0, 3], [0, 1, 2]):
        out = partial_trace(rho, keep)
        assert close(out, partial_trace_loops(rho, keep), atol=1e-13)
        assert is_density_matrix(out)


@pytest.mark.parametrize("keep", [[], [0, 1, 2, 3], [4], [-1]])
def test_invalid_keep_sets(keep):
    with pytest.raises(InvalidPartitionError):
        partial_trace(np.eye(16) / 16, keep)


def test_linear_entropy_examples():
    assert abs(linear_entropy(np.eye(2) / 2) - 0.5) < 1e-15
    assert abs(linear_entropy(np.eye(4) / 4) - 0.75) < 1e-15
    assert abs(linear_entropy(density_matrix(basis_state([0, 1])))) < 1e-15


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), keep=st.sampled_from(SUBSETS))
def test_partial_trace_properties(seed, keep):
    rng = np.random.default_rng(seed)
    psi = random_state(rng, 4)
    rho = density_matrix(psi)
    out = partial_trace(rho, keep)
    assert abs(np.trace(out) - 1) < 1e-12
    assert is_density_matrix(out)
    d = out.shape[0]
    assert -1e-12 <= linear_entropy(out) <= 1 - 1 / d + 1e-12
    # Schmidt symmetry across (keep, complement)
    comp = [q for q in range(4) if q not in keep]
    assert abs(linear_entropy(out) - linear_entropy(partial_trace(rho, comp))) < 1e-12
    # tracing in two steps agrees with tracing directly
    if len(keep) > 1:
        sub = list(keep[:-1])
        positions = [keep.index(q) for q in sub]
        two_step = partial_trace(out, positions)
        assert close(two_step, partial_trace(rho, sub), atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_tensor_product_associative(seed):
    rng = np.random.default_rng(seed)
    a, b, c = random_state(rng, 1), random_state(rng, 1), random_state(rng, 2)
    left = tensor_product(tensor_product(a, b), c)
    right = tensor_product(a, tensor_product(b, c))
    assert close(left, right, atol=1e-12)
    ops = [rng.normal(size=(2, 2)) for _ in range(3)]
    assert close(
        tensor_product(tensor_product(ops[0], ops[1]), ops[2]),
        tensor_product(ops[0], tensor_product(ops[1], ops[2])),
        atol=1e-12,
    )
