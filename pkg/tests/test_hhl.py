import json

import numpy as np
import pytest

from conftest import random_unitary, random_vector
from qdesk.cli.demos import identity, two_by_two
from qdesk.hhl import (
    HhlProblem,
    build_hhl_circuit,
    classical_solution,
    clock_readout,
    conditioned_evolution_blocks,
    default_t0,
    herald_probability,
    hhl_gate_complexity,
    hhl_layout,
    load_problem,
    rotation_angle,
    rotation_values,
    run_hhl,
    snap_spectrum,
)
from qdesk.shared.errors import InvalidInputError
from qdesk.shared.utils import fidelity, is_unitary
from qdesk.simulator import sample


def test_worked_two_by_two():
    p = two_by_two()
    assert p.is_exact
    result = run_hhl(p)
    assert result.herald_prob == pytest.approx(0.625, abs=1e-9)
    assert result.expected_herald_prob == pytest.approx(0.625, abs=1e-9)
    assert fidelity(result.state, np.array([3, -1]) / np.sqrt(10)) >= 1 - 1e-9
    assert result.fidelity_vs_oracle >= 1 - 1e-9
    assert result.clock_residual <= 1e-18
    assert result.clock_zero_prob == pytest.approx(1.0, abs=1e-12)


def test_layout_and_stages():
    p = two_by_two()
    assert hhl_layout(p).total_qubits == 4
    ledger = build_hhl_circuit(p).ledger()
    for stage in ("estimation", "rotation", "uncompute"):
        assert ledger.stage(stage) > 0
    # |b> = |0> needs no preparation gates, so both Fourier stages cost the same
    assert ledger.stage("estimation") == ledger.stage("uncompute")


def test_conditioned_evolution_blocks():
    blocks = conditioned_evolution_blocks(two_by_two())
    assert len(blocks) == 4
    assert np.max(np.abs(blocks[0] - np.eye(2))) <= 1e-12
    for block in blocks:
        assert is_unitary(block, tol=1e-10)


def test_identity_system():
    p = identity(4)
    assert herald_probability(p) == pytest.approx(1.0, abs=1e-12)
    result = run_hhl(p)
    assert result.herald_prob == pytest.approx(1.0, abs=1e-9)
    assert fidelity(result.state, [1, 2, 3, 4]) >= 1 - 1e-9


def test_clock_precision_does_not_change_exact_answer():
    coarse = run_hhl(two_by_two())
    fine = run_hhl(two_by_two().with_precision(3))
    assert fidelity(coarse.state, fine.state) >= 1 - 1e-9
    assert fine.herald_prob == pytest.approx(coarse.herald_prob, abs=1e-9)


def test_herald_probability_scales_with_constant_squared():
    p = two_by_two()
    half = HhlProblem(A=p.A, b=p.b, m=p.m, t0=p.t0, C=0.5)
    assert herald_probability(p) / herald_probability(half) == pytest.approx(4.0, abs=1e-9)
    assert run_hhl(half).herald_prob == pytest.approx(0.625 / 4, abs=1e-9)


def test_herald_probability_by_sampling():
    final = build_hhl_circuit(two_by_two()).run()
    shots = 100000
    counts = sample(final, shots, seed=21)
    heralded = sum(c for index, c in counts.items() if index & 1)
    sigma = np.sqrt(0.625 * 0.375 / shots)
    assert abs(heralded / shots - 0.625) <= 5 * sigma


def test_phase_estimation_reads_eigenvalues():
    p = two_by_two()
    assert clock_readout(p, [1, 1])[2] >= 1 - 1e-12
    assert clock_readout(p, [1, -1])[1] >= 1 - 1e-12


def test_rotation_angle():
    assert rotation_angle(1, 1.0) == pytest.approx(np.pi)
    assert rotation_angle(2, 1.0) == pytest.approx(np.pi / 3)
    assert rotation_angle(1, 1.5) == pytest.approx(np.pi)


@pytest.mark.parametrize("trial", range(20))
def test_snapped_random_systems(trial):
    rng = np.random.default_rng(500 + trial)
    size = 2 ** int(rng.integers(1, 4))
    Q = random_unitary(rng, size)
    A = Q @ np.diag(rng.uniform(0.6, 7.4, size=size)) @ Q.conj().T
    p = snap_spectrum(HhlProblem(A=A, b=random_vector(rng, size), m=3, t0=2 * np.pi))
    assert p.is_exact
    result = run_hhl(p)
    assert result.fidelity_vs_oracle >= 1 - 1e-9
    assert result.herald_prob == pytest.approx(result.expected_herald_prob, abs=1e-9)
    assert result.clock_residual <= 1e-18


def test_inexact_spectrum_improves_with_precision():
    # fractional parts of the scaled eigenvalues stay fixed as m grows
    rng = np.random.default_rng(77)
    Q = random_unitary(rng, 4)
    A = Q @ np.diag([0.25, 0.5, 0.75, 1.0]) @ Q.conj().T
    b = random_vector(rng, 4)
    results = [run_hhl(HhlProblem(A=A, b=b, m=m)) for m in range(3, 9)]
    assert not any(r.exact_spectrum for r in results)
    fidelities = [r.fidelity_vs_oracle for r in results]
    for coarse, fine in zip(fidelities, fidelities[1:]):
        assert fine >= coarse - 1e-6
    assert fidelities[-1] > 0.99


def test_rotations_follow_the_spectrum():
    exact = two_by_two()
    assert rotation_values(exact) == [1, 2]
    ops = [op for op in build_hhl_circuit(exact).ops if op.stage == "rotation"]
    assert len(ops) == 2

    inexact = HhlProblem(A=np.diag([0.25, 1.0]), b=[1, 1], m=3)
    assert not inexact.is_exact
    assert rotation_values(inexact) == list(range(1, 8))
    ops = [op for op in build_hhl_circuit(inexact).ops if op.stage == "rotation"]
    assert len(ops) == 7


def test_defaults():
    A = np.diag([0.5, 1.0])
    p = HhlProblem(A=A, b=[1, 1], m=3)
    assert p.t0 == pytest.approx(default_t0(A, 3)) == pytest.approx(14 * np.pi)
    assert np.allclose(p.scaled_eigenvalues, [3.5, 7])
    assert p.C == pytest.approx(3.5)
    assert np.linalg.norm(p.b) == pytest.approx(1.0)
    assert fidelity(classical_solution(p), [2, 1]) >= 1 - 1e-12


def test_gate_complexity():
    p = HhlProblem(A=np.eye(16), b=np.ones(16), m=4, t0=2 * np.pi, C=1.0)
    figure = hhl_gate_complexity(p, s=2, t=1)
    assert figure.evaluate(m=4, s=2, t=1, N=16) == pytest.approx(36)
    assert hhl_gate_complexity(p, s=0, t=1).render() == "m^2 + log(N)"
    m2 = hhl_gate_complexity(p, s=0, t=1)
    assert m2.evaluate(m=8, N=1) == pytest.approx(4 * m2.evaluate(m=4, N=1))


def test_problem_validation():
    with pytest.raises(InvalidInputError):
        HhlProblem(A=[[1, 1], [0, 1]], b=[1, 0], m=2)
    with pytest.raises(InvalidInputError):
        HhlProblem(A=[[1, 0], [0, 0]], b=[1, 0], m=2)
    with pytest.raises(InvalidInputError):
        HhlProblem(A=np.eye(2), b=[0, 0], m=2)
    with pytest.raises(InvalidInputError):
        HhlProblem(A=np.eye(2), b=[1, 0], m=0)
    with pytest.raises(InvalidInputError):
        HhlProblem(A=np.eye(3), b=[1, 0, 0], m=2)
    # scaled eigenvalue 4 does not fit a 2-bit clock
    with pytest.raises(InvalidInputError):
        HhlProblem(A=np.eye(2), b=[1, 0], m=2, t0=8 * np.pi)
    with pytest.raises(InvalidInputError):
        HhlProblem(A=np.eye(2), b=[1, 0], m=2, t0=2 * np.pi, C=1.5)
    with pytest.raises(InvalidInputError):
        HhlProblem(A=-np.eye(2), b=[1, 0], m=2)


def test_problem_json(tmp_path):
    p = two_by_two()
    path = tmp_path / "hhl.json"
    path.write_text(json.dumps(p.to_json()))
    loaded = load_problem(str(path))
    assert np.allclose(loaded.A, p.A)
    assert loaded.m == 2 and loaded.t0 == pytest.approx(p.t0) and loaded.C == pytest.approx(1.0)
    bare = HhlProblem.from_json({"A": [[0.5, 0], [0, 1]], "b": [1, 0], "m": 3})
    assert bare.t0 == pytest.approx(14 * np.pi)
    with pytest.raises(InvalidInputError):
        HhlProblem.from_json({"A": [[1, 0], [0, 1]], "b": [1, 0]})
    with pytest.raises(InvalidInputError):
        load_problem(str(tmp_path / "missing.json"))
