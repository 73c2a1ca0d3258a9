import json

import numpy as np
import pytest

from qdesk.ledger.term import N_LOG2_N
from qdesk.shared.errors import InvalidInputError
from qdesk.shared.utils import fidelity
from qdesk.simulator import GateKind
from qdesk.stateprep import (
    PrepScheme,
    TargetState,
    load_target_csv,
    load_target_json,
    measured_prep_count,
    prep_cost,
    prepare,
    random_target,
    synthesize_prep,
)

REAL_COUNTS = {8: 19, 16: 91, 32: 347, 64: 1147}
COMPLEX_COUNTS = {8: 35, 16: 163, 32: 603, 64: 1947}


def test_ground_state_needs_no_gates():
    circuit = synthesize_prep(TargetState(amplitudes=[1, 0, 0, 0, 0, 0, 0, 0]))
    assert len(circuit) == 0
    assert circuit.ledger().elementary_count == 0


def test_uniform_state():
    state = synthesize_prep(TargetState(amplitudes=np.full(4, 0.5))).run()
    assert np.max(np.abs(state.amplitudes - 0.5)) <= 1e-12


def test_only_single_and_controlled_single_gates():
    circuit = synthesize_prep(random_target(16, seed=4))
    kinds = {op.kind for op in circuit}
    assert kinds <= {GateKind.SINGLE, GateKind.CONTROLLED}


@pytest.mark.parametrize("seed", range(50))
def test_random_targets_are_prepared(seed):
    rng = np.random.default_rng(seed)
    size = 2 ** int(rng.integers(1, 7))
    target = random_target(size, seed=seed, real=bool(seed % 2))
    state = synthesize_prep(target).run()
    assert fidelity(state.amplitudes, target.amplitudes) >= 1 - 1e-10
    # phases are reproduced, not only magnitudes
    assert np.max(np.abs(state.amplitudes - target.amplitudes)) <= 1e-8


def test_prepare_normalizes_direction():
    state = prepare([3, 0, 0, -4j]).run()
    assert np.allclose(state.amplitudes, [0.6, 0, 0, -0.8j], atol=1e-12)


def test_qram_figures():
    ff = prep_cost(PrepScheme.FlipFlopQRAM, 1024)
    assert ff.term.render() == "log(N)"
    assert ff.numeric == pytest.approx(10)
    assert ff.encode.render() == "N*log(N)"
    bb = prep_cost(PrepScheme.BucketBrigadeQRAM, 1024)
    assert bb.term.render() == "log^2(N)"
    assert bb.numeric == pytest.approx(100)
    assert prep_cost(PrepScheme.ConventionalQRAM, 1024).numeric == pytest.approx(1024)


def test_repeated_queries_and_data_encoding():
    cost = prep_cost(PrepScheme.ConventionalQRAM, 16, queries=3, data_encoding=True)
    assert cost.repeated_queries.render() == "3*N^2"
    assert cost.data_encoding.render() == "sqrt(N)"
    payload = cost.to_json()
    assert payload["repeated_queries"]["numeric"] == pytest.approx(768)
    assert payload["data_encoding"]["numeric"] == pytest.approx(4)
    assert prep_cost(PrepScheme.FlipFlopQRAM, 16, queries=3).repeated_queries.render() == "3*log(N)"
    with pytest.raises(InvalidInputError):
        prep_cost(PrepScheme.ConventionalQRAM, 16, queries=0)


@pytest.mark.parametrize("size", sorted(REAL_COUNTS))
def test_direct_manipulation_counts(size):
    real = measured_prep_count(random_target(size, seed=7, real=True))
    complex_ = measured_prep_count(random_target(size, seed=7))
    assert real == REAL_COUNTS[size]
    assert complex_ == COMPLEX_COUNTS[size]
    assert real <= N_LOG2_N.evaluate(N=size)
    assert complex_ <= 2 * N_LOG2_N.evaluate(N=size)


def test_direct_manipulation_growth():
    sizes = sorted(COMPLEX_COUNTS)
    for small, big in zip(sizes, sizes[1:]):
        if small < 16:
            continue
        # doubling N may grow the count by 2*(log ratio)^2, with 25% slack for lower-order terms
        bound = 2.5 * np.log2(big) ** 2 / np.log2(small) ** 2
        assert REAL_COUNTS[big] / REAL_COUNTS[small] <= bound
        assert COMPLEX_COUNTS[big] / COMPLEX_COUNTS[small] <= bound


def test_direct_manipulation_stays_near_n_log2_n():
    c = COMPLEX_COUNTS[8] / N_LOG2_N.evaluate(N=8)
    for size, count in COMPLEX_COUNTS.items():
        assert count <= 2 * c * N_LOG2_N.evaluate(N=size)


def test_measured_prep_cost():
    cost = prep_cost(PrepScheme.DirectManipulation, 16, measure=True, seed=3)
    assert cost.term.render() == "N*log^2(N)"
    assert cost.numeric == pytest.approx(256)
    assert cost.measured == COMPLEX_COUNTS[16]
    assert prep_cost(PrepScheme.DirectManipulation, 16).measured is None
    with pytest.raises(InvalidInputError):
        prep_cost(PrepScheme.DirectManipulation, 16, measure=True, target=random_target(8, seed=1))


@pytest.mark.parametrize("size", [0, 1, 3, 12])
def test_prep_cost_rejects_bad_sizes(size):
    with pytest.raises(InvalidInputError):
        prep_cost(PrepScheme.FlipFlopQRAM, size)


def test_target_validation():
    with pytest.raises(InvalidInputError):
        TargetState(amplitudes=[1, 0, 0])
    with pytest.raises(InvalidInputError):
        TargetState(amplitudes=[0, 0])
    with pytest.raises(InvalidInputError):
        TargetState(amplitudes=[1, 1])
    with pytest.raises(InvalidInputError):
        TargetState.normalized([0, 0, 0, 0])


def test_load_target_csv(tmp_path):
    path = tmp_path / "target.csv"
    path.write_text("index,re,im\n0,0.6,0\n3,0,0.8\n")
    target = load_target_csv(str(path))
    assert target.size == 4
    assert np.allclose(target.amplitudes, [0.6, 0, 0, 0.8j])
    with pytest.raises(InvalidInputError):
        load_target_csv(str(tmp_path / "missing.csv"))


def test_load_target_json(tmp_path):
    path = tmp_path / "target.json"
    path.write_text(json.dumps({"amplitudes": [[0.6, 0], 0.8]}))
    assert np.allclose(load_target_json(str(path)).amplitudes, [0.6, 0.8])
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InvalidInputError):
        load_target_json(str(bad))
