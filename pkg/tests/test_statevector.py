import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphent.graphs import flip_edge, from_edge_list, gen_young_fibonacci
from graphent.statevector import (
    InitialQubit,
    InteractionParams,
    PureState,
    apply_edge_phase,
    build_graph_state,
    pauli_expectations,
    product_state,
)

from helpers import angles, dense_graph_state, dense_pauli_expectations, directed_graphs, probabilities

BALANCED = InitialQubit()


# ----------------------------------------------------------------------
# parameter types
# ----------------------------------------------------------------------

def test_initial_qubit_amplitudes():
    q = InitialQubit(p=0.25, delta0=0.0, delta1=math.pi / 2)
    assert q.alpha0 == pytest.approx(math.sqrt(0.75))
    assert q.alpha1 == pytest.approx(0.5j)


def test_initial_qubit_rejects_bad_p():
    with pytest.raises(ValueError):
        InitialQubit(p=1.5)


def test_interaction_params_reject_nonfinite():
    with pytest.raises(ValueError):
        InteractionParams(math.nan)


def test_pure_state_shape_checked():
    with pytest.raises(ValueError):
        PureState(2, np.ones(3))


# ----------------------------------------------------------------------
# product states
# ----------------------------------------------------------------------

def test_product_state_basis():
    assert np.allclose(product_state(1, InitialQubit(p=0.0)).amplitudes, [1, 0])


def test_product_state_balanced():
    s = product_state(1)
    assert np.allclose(s.amplitudes, [1 / math.sqrt(2), 1 / math.sqrt(2)])


def test_product_state_two_qubits():
    assert np.allclose(product_state(2).amplitudes, [0.5, 0.5, 0.5, 0.5])


def test_product_state_bit_convention():
    # qubit 0 is the least significant bit: |1>_0 |0>_1 sits at index 1
    s = product_state(2, InitialQubit(p=0.25))
    a0, a1 = math.sqrt(0.75), math.sqrt(0.25)
    assert np.allclose(s.amplitudes, [a0 * a0, a1 * a0, a0 * a1, a1 * a1])


def test_qubit_cap_enforced():
    with pytest.raises(ValueError):
        product_state(23)
    with pytest.raises(ValueError):
        product_state(6, max_qubits=5)
    assert product_state(6, max_qubits=6).num_qubits == 6


@given(st.integers(1, 8), probabilities, angles, angles)
def test_product_state_normalized(m, p, d0, d1):
    s = product_state(m, InitialQubit(p, d0, d1))
    assert s.norm_error < 1e-12


# ----------------------------------------------------------------------
# edge phases
# ----------------------------------------------------------------------

def test_edge_phase_on_basis_states():
    params = InteractionParams(theta=math.pi / 2, psi=0.0)
    ket10 = PureState(2, [0, 0, 1, 0])  # bit1 (control a) = 1, bit0 (target b) = 0
    assert np.allclose(apply_edge_phase(ket10, 1, 0, params).amplitudes, [0, 0, 1j, 0])
    ket11 = PureState(2, [0, 0, 0, 1])
    assert np.allclose(apply_edge_phase(ket11, 1, 0, params).amplitudes, [0, 0, 0, -1j])


@pytest.mark.parametrize("index", [0, 1])  # control bit 0: both |00> and |01>
def test_edge_phase_inactive_when_control_zero(index):
    amps = np.zeros(4)
    amps[index] = 1.0
    state = PureState(2, amps)
    out = apply_edge_phase(state, 1, 0, InteractionParams(1.2, 0.7))
    assert np.array_equal(out.amplitudes, state.amplitudes)


def test_edge_phase_rejects_bad_indices():
    s = product_state(2)
    with pytest.raises(ValueError):
        apply_edge_phase(s, 0, 0, InteractionParams(1.0))
    with pytest.raises(ValueError):
        apply_edge_phase(s, 0, 2, InteractionParams(1.0))


# ----------------------------------------------------------------------
# graph states
# ----------------------------------------------------------------------

def test_empty_graph_is_product_state():
    g = from_edge_list(3, [])
    s = build_graph_state(g, BALANCED, InteractionParams(1.1, 0.3))
    assert np.array_equal(s.amplitudes, product_state(3).amplitudes)


def test_single_edge_amplitudes():
    # edge (1, 0): control on bit 1, target on bit 0
    g = from_edge_list(2, [(1, 0)])
    s = build_graph_state(g, BALANCED, InteractionParams(math.pi / 2, 0.0))
    assert np.allclose(s.amplitudes, [0.5, 0.5, 0.5j, -0.5j], atol=1e-15)


def test_edge_order_irrelevant():
    edges = [(0, 1), (1, 2)]
    g1 = from_edge_list(3, edges)
    g2 = from_edge_list(3, edges[::-1])
    params = InteractionParams(0.9, -0.4)
    s1 = build_graph_state(g1, BALANCED, params)
    s2 = build_graph_state(g2, BALANCED, params)
    assert np.max(np.abs(s1.amplitudes - s2.amplitudes)) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(directed_graphs(max_vertices=5), angles, angles, probabilities, angles, angles, st.randoms(use_true_random=False))
def test_matches_dense_reference_and_order_stable(g, theta, psi, p, d0, d1, rnd):
    qubit = InitialQubit(p, d0, d1)
    params = InteractionParams(theta, psi)
    state = build_graph_state(g, qubit, params)
    assert state.norm_error <= 1e-12
    reference = dense_graph_state(g, theta, psi, p, d0, d1)
    assert np.max(np.abs(state.amplitudes - reference)) <= 1e-12
    shuffled = list(g.edges)
    rnd.shuffle(shuffled)
    again = build_graph_state(from_edge_list(g.num_vertices, shuffled), qubit, params)
    assert np.max(np.abs(state.amplitudes - again.amplitudes)) <= 1e-12


# ----------------------------------------------------------------------
# Pauli expectations
# ----------------------------------------------------------------------

def test_plus_state_points_along_x():
    s = product_state(3)
    for i in range(3):
        assert np.allclose(pauli_expectations(s, i), [1.0, 0.0, 0.0], atol=1e-14)


@settings(max_examples=40, deadline=None)
@given(directed_graphs(max_vertices=5), angles, angles, probabilities, angles, angles)
def test_sigma_z_is_one_minus_two_p(g, theta, psi, p, d0, d1):
    # holds whatever the graph, angles, and input phases
    state = build_graph_state(g, InitialQubit(p, d0, d1), InteractionParams(theta, psi))
    for i in range(g.num_vertices):
        vec = pauli_expectations(state, i)
        assert vec[2] == pytest.approx(1 - 2 * p, abs=1e-10)
        assert np.all(np.abs(vec) <= 1 + 1e-12)


def test_maximally_entangled_pair_has_zero_vector():
    g = from_edge_list(2, [(0, 1)])
    state = build_graph_state(g, BALANCED, InteractionParams(math.pi / 2))
    for i in range(2):
        assert np.linalg.norm(pauli_expectations(state, i)) <= 1e-12


@settings(max_examples=30, deadline=None)
@given(directed_graphs(min_vertices=2, max_vertices=5), angles, angles, st.data())
def test_pauli_matches_dense_reference(g, theta, psi, data):
    state = build_graph_state(g, BALANCED, InteractionParams(theta, psi))
    reference = dense_graph_state(g, theta, psi)
    i = data.draw(st.integers(0, g.num_vertices - 1))
    assert np.allclose(
        pauli_expectations(state, i),
        dense_pauli_expectations(reference, i, g.num_vertices),
        atol=1e-11,
    )


def test_flip_edge_preserves_vector_norms():
    # the norm of each vertex's Pauli vector only sees the total degree;
    # x/y components individually may move.
    g = gen_young_fibonacci(3)
    params = InteractionParams(0.8, 0.5)
    base = build_graph_state(g, BALANCED, params)
    norms = [np.linalg.norm(pauli_expectations(base, i)) ** 2 for i in range(g.num_vertices)]
    for edge_index in range(g.num_edges):
        flipped = build_graph_state(flip_edge(g, edge_index), BALANCED, params)
        for i in range(g.num_vertices):
            n_after = np.linalg.norm(pauli_expectations(flipped, i)) ** 2
            assert n_after == pytest.approx(norms[i], abs=1e-10)
