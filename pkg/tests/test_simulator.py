import numpy as np
import pytest

from conftest import random_state, random_unitary
from qdesk.shared.errors import HeraldingError, InvalidInputError
from qdesk.shared.utils import fidelity
from qdesk.simulator import (
    Circuit,
    CostRule,
    GateCountLedger,
    GateOp,
    RegisterLayout,
    StateVector,
    apply,
    elementary_cost,
    fourier_count,
    iqft,
    marginal,
    post_select,
    qft,
    qft_op,
    sample,
)
from qdesk.simulator.gates import H, X
from qdesk.simulator.statevector import apply_matrix


def test_x_flips_least_significant_qubit():
    layout = RegisterLayout.of(q=2)
    state = apply(StateVector.zeros(layout), GateOp(matrix=X, targets=(0,)))
    assert np.allclose(state.amplitudes, [0, 1, 0, 0])


def test_hadamard_on_zero():
    state = apply(StateVector.zeros(RegisterLayout.of(q=1)), GateOp(matrix=H, targets=(0,)))
    assert np.allclose(state.amplitudes, [1 / np.sqrt(2), 1 / np.sqrt(2)])


def test_controlled_x_on_superposition():
    layout = RegisterLayout.of(q=2)
    start = StateVector(layout=layout, amplitudes=np.array([1, 0, 1, 0]) / np.sqrt(2))
    state = apply(start, GateOp(matrix=X, targets=(0,), controls=(1,)))
    assert np.allclose(state.amplitudes, np.array([1, 0, 0, 1]) / np.sqrt(2))


def test_zero_control_value():
    layout = RegisterLayout.of(q=2)
    state = apply(StateVector.zeros(layout), GateOp(matrix=X, targets=(1,), controls=(0,), control_values=(0,)))
    assert np.allclose(state.amplitudes, [0, 0, 1, 0])


def test_apply_rejects_invalid_ops():
    state = StateVector.zeros(RegisterLayout.of(q=2))
    with pytest.raises(InvalidInputError):
        apply(state, GateOp(matrix=[[1, 1], [0, 1]], targets=(0,)))
    with pytest.raises(InvalidInputError):
        apply(state, GateOp(matrix=X, targets=(2,)))
    with pytest.raises(InvalidInputError):
        apply(state, GateOp(matrix=X, targets=(0,), controls=(0,)))


def test_linearity(rng):
    layout = RegisterLayout.of(q=3)
    op = GateOp(matrix=random_unitary(rng, 4), targets=(2, 0), controls=(1,), register="q")
    for _ in range(10):
        s1, s2 = random_state(rng, layout).amplitudes, random_state(rng, layout).amplitudes
        alpha, beta = rng.normal() + 1j * rng.normal(), rng.normal() + 1j * rng.normal()
        combined = apply_matrix(alpha * s1 + beta * s2, 3, op)
        separate = alpha * apply_matrix(s1, 3, op) + beta * apply_matrix(s2, 3, op)
        assert np.max(np.abs(combined - separate)) <= 1e-12


def test_block_matches_kron(rng):
    layout = RegisterLayout.of(q=3)
    U = random_unitary(rng, 4)
    state = random_state(rng, layout)
    out = apply(state, GateOp(matrix=U, targets=(0, 1), register="q"))
    assert np.allclose(out.amplitudes, np.kron(np.eye(2), U) @ state.amplitudes, atol=1e-12)


def test_norm_preserved_over_random_sequence(rng):
    layout = RegisterLayout.of(a=2, b=2)
    state = StateVector.zeros(layout)
    for _ in range(40):
        qubits = rng.permutation(4)
        op = GateOp(matrix=random_unitary(rng, 2), targets=(int(qubits[0]),), controls=(int(qubits[1]),))
        state = apply(state, op)
    assert abs(state.norm - 1) <= 1e-12


def test_qft_one_qubit_is_hadamard():
    layout = RegisterLayout.of(r=1)
    assert np.allclose(qft_op(layout, "r").matrix, H)
    state = qft(StateVector.zeros(layout), "r")
    assert np.allclose(state.amplitudes, [1 / np.sqrt(2), 1 / np.sqrt(2)])


def test_qft_two_qubits_is_dft():
    layout = RegisterLayout.of(r=2)
    expected = np.array([[1j ** (j * k) for j in range(4)] for k in range(4)]) / 2
    unitary = Circuit(layout, [qft_op(layout, "r")]).unitary()
    assert np.max(np.abs(unitary - expected)) <= 1e-12


def test_qft_inverse_identity(rng):
    for _ in range(100):
        width = int(rng.integers(1, 5))
        layout = RegisterLayout.of(pad=1, r=width)
        state = random_state(rng, layout)
        back = iqft(qft(state, "r"), "r")
        assert np.max(np.abs(back.amplitudes - state.amplitudes)) <= 1e-12


@pytest.mark.parametrize("width", [1, 2, 3, 4, 5])
def test_qft_unitary_and_counted(width):
    layout = RegisterLayout.of(r=width)
    op = qft_op(layout, "r")
    assert np.max(np.abs(op.matrix.conj().T @ op.matrix - np.eye(2 ** width))) <= 1e-10
    assert elementary_cost(op) == width * (width + 1) // 2 + width // 2 == fourier_count(width)


def test_post_select_equal_branches():
    layout = RegisterLayout.of(data=1, flag=1)
    a, b = np.array([0.6, 0.8]), np.array([1.0, 0.0])
    state = StateVector(layout=layout, amplitudes=np.concatenate([a, b]) / np.sqrt(2))
    conditional, probability = post_select(state, "flag", "0")
    assert probability == pytest.approx(0.5, abs=1e-12)
    assert conditional.layout.names == ["data"]
    assert np.allclose(conditional.amplitudes, a)


def test_post_select_register_already_zero(rng):
    layout = RegisterLayout.of(anc=1, data=2)
    data = random_state(rng, RegisterLayout.of(data=2)).amplitudes
    state = StateVector(layout=layout, amplitudes=np.kron(data, [1, 0]))
    conditional, probability = post_select(state, "anc", 0)
    assert probability == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(conditional.amplitudes, data)


def test_post_select_probabilities_sum_to_one(rng):
    state = random_state(rng, RegisterLayout.of(a=1, b=2, c=1))
    total = sum(post_select(state, "b", v)[1] for v in range(4))
    assert total == pytest.approx(1.0, abs=1e-12)
    assert np.sum(marginal(state, "b")) == pytest.approx(1.0, abs=1e-12)


def test_post_select_empty_branch_fails():
    state = StateVector.zeros(RegisterLayout.of(a=1, b=1))
    with pytest.raises(HeraldingError):
        post_select(state, "a", 1)
    with pytest.raises(InvalidInputError):
        post_select(state, "a", "01")


def test_sample_basis_state():
    state = StateVector.basis(RegisterLayout.of(q=3), 5)
    assert sample(state, 1000, seed=3) == {5: 1000}


def test_sample_uniform_within_binomial_bounds():
    layout = RegisterLayout.of(q=2)
    state = StateVector(layout=layout, amplitudes=np.full(4, 0.5))
    shots = 100000
    counts = sample(state, shots, seed=11)
    sigma = np.sqrt(0.25 * 0.75 / shots)
    assert sum(counts.values()) == shots
    for outcome in range(4):
        assert abs(counts[outcome] / shots - 0.25) <= 5 * sigma


def test_sample_is_deterministic(rng):
    state = random_state(rng, RegisterLayout.of(q=3))
    assert sample(state, 500, seed=9) == sample(state, 500, seed=9)
    with pytest.raises(InvalidInputError):
        sample(state, 0, seed=9)


def test_elementary_costs():
    assert elementary_cost(GateOp(matrix=H, targets=(0,))) == 1
    assert elementary_cost(GateOp(matrix=X, targets=(0,), controls=(1, 2))) == 4
    assert elementary_cost(GateOp(matrix=np.eye(2), targets=(0,), register="r")) == 4
    assert elementary_cost(GateOp(matrix=np.eye(2), targets=(0,), controls=(1,), register="r")) == 4
    assert elementary_cost(GateOp(matrix=np.eye(4), targets=(0, 1), register="r")) == 8
    assert elementary_cost(GateOp(matrix=np.eye(4), targets=(0, 1), controls=(2,), register="r")) == 72
    oracle = GateOp(matrix=np.eye(4), targets=(0, 1), controls=(2, 3), register="r", rule=CostRule.ORACLE)
    assert elementary_cost(oracle) == 4


def test_ledger_additivity(rng):
    layout = RegisterLayout.of(a=1, b=2)
    first = Circuit(layout, [GateOp(matrix=H, targets=(0,)), qft_op(layout, "b")])
    second = Circuit(layout, [GateOp(matrix=random_unitary(rng, 4), targets=(1, 2), controls=(0,), register="b")])
    joint = first.then(second)
    assert joint.ledger() == first.ledger() + second.ledger()
    ran = joint.run()
    assert ran.ledger == joint.ledger()
    assert ran.ledger.elementary_count >= ran.ledger.raw_ops
    assert GateCountLedger().elementary_count == 0


def test_inverse_undoes_circuit(rng):
    layout = RegisterLayout.of(a=1, b=2)
    circuit = Circuit(
        layout,
        [
            GateOp(matrix=H, targets=(0,)),
            GateOp(matrix=random_unitary(rng, 4), targets=(1, 2), controls=(0,), register="b"),
            qft_op(layout, "b"),
        ],
    )
    assert np.max(np.abs(circuit.then(circuit.inverse()).unitary() - np.eye(8))) <= 1e-12


def test_embed_with_controls():
    small = Circuit(RegisterLayout.of(work=1), [GateOp(matrix=X, targets=(0,))])
    layout = RegisterLayout.of(ctl=1, work=1)
    embedded = small.embed(layout, "work", controls={0: 1})
    assert embedded.ops[0].targets == (1,)
    assert embedded.ops[0].controls == (0,)
    start = StateVector(layout=layout, amplitudes=[0, 1, 0, 0])
    assert np.allclose(embedded.run(start).amplitudes, [0, 0, 0, 1])
    with pytest.raises(InvalidInputError):
        small.embed(RegisterLayout.of(work=2), "work")


def test_circuit_json_round_trip(rng):
    layout = RegisterLayout.of(a=1, b=2)
    circuit = Circuit(
        layout,
        [
            GateOp(matrix=H, targets=(0,), stage="prep"),
            GateOp(matrix=random_unitary(rng, 4), targets=(1, 2), controls=(0,), control_values=(0,), register="b"),
            qft_op(layout, "b", inverse=True),
        ],
    )
    loaded = Circuit.from_json(circuit.to_json())
    assert loaded.layout == layout
    assert loaded.ledger() == circuit.ledger()
    state = random_state(rng, layout)
    assert fidelity(loaded.run(state).amplitudes, circuit.run(state).amplitudes) >= 1 - 1e-12


def test_layout_contract():
    layout = RegisterLayout.of(anc=1, clock=3, work=2)
    assert layout.total_qubits == 6
    assert layout.qubits("clock") == (1, 2, 3)
    assert layout.without("clock").names == ["anc", "work"]
    with pytest.raises(InvalidInputError):
        RegisterLayout(registers=[("a", 1), ("a", 2)])
    with pytest.raises(InvalidInputError):
        layout.width("missing")
