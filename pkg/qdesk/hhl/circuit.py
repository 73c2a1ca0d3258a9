from typing import List

import numpy as np

from qdesk.hhl.problem import HhlProblem
from qdesk.shared.log import get_logger
from qdesk.simulator import Circuit, GateOp, RegisterLayout, qft_op
from qdesk.simulator.gates import H, ry
from qdesk.stateprep import prepare

logger = get_logger("hhl.circuit")

ANCILLA = "anc"
CLOCK = "clock"
WORK = "work"


def hhl_layout(p: HhlProblem) -> RegisterLayout:
    return RegisterLayout(registers=[(ANCILLA, 1), (CLOCK, p.m), (WORK, p.num_qubits)])


def evolution_power(p: HhlProblem, power: float) -> np.ndarray:
    """
    exp(i A t0 power / 2^m) through the eigendecomposition of A.
    """
    values, vectors = p.eigensystem()
    phases = np.exp(1j * values * p.t0 * power / p.clock_size)
    return (vectors * phases[np.newaxis, :]) @ vectors.conj().T


def conditioned_evolution_blocks(p: HhlProblem) -> List[np.ndarray]:
    """
    The blocks exp(i A k t0 / 2^m) of the conditioned evolution, one per clock value k.
    """
    return [evolution_power(p, k) for k in range(p.clock_size)]


def rotation_angle(value: int, constant: float) -> float:
    """
    Ry angle mapping |0> to sqrt(1 - (C/v)^2)|0> + (C/v)|1>; values below C saturate at pi.
    """
    return 2.0 * np.arcsin(min(1.0, constant / value))


def _bits(value: int, width: int):
    return tuple((value >> i) & 1 for i in range(width))


def _estimation_ops(p: HhlProblem, layout: RegisterLayout, stage: str, inverse: bool) -> List[GateOp]:
    clock = layout.qubits(CLOCK)
    work = layout.qubits(WORK)
    hadamards = [GateOp(matrix=H, targets=(q,), label="H", stage=stage) for q in clock]
    evolutions = []
    for j, q in enumerate(clock):
        block = evolution_power(p, 2 ** j)
        label = f"U_A^{2 ** j}"
        if inverse:
            block, label = block.conj().T, f"{label}†"
        evolutions.append(
            GateOp(matrix=block, targets=work, controls=(q,), label=label, stage=stage, register=WORK)
        )
    if inverse:
        return [qft_op(layout, CLOCK, stage=stage)] + list(reversed(evolutions)) + hadamards
    return hadamards + evolutions + [qft_op(layout, CLOCK, inverse=True, stage=stage)]


def phase_estimation_circuit(p: HhlProblem, include_prep: bool = True) -> Circuit:
    """
    Stage one on its own: optional |b> preparation, Hadamards on the clock, the conditioned evolution and an
    inverse QFT. An eigenvector input leaves its scaled eigenvalue in the clock register.
    :param p: HHL problem
    :param include_prep: Prepare |b> on the work register first
    :return: Circuit over the HHL layout
    """
    layout = hhl_layout(p)
    circuit = Circuit(layout=layout)
    if include_prep:
        circuit = circuit.then(prepare(p.b).embed(layout, WORK, stage="estimation"))
    return circuit.extend(_estimation_ops(p, layout, stage="estimation", inverse=False))


def rotation_values(p: HhlProblem) -> List[int]:
    """
    Clock values that receive a rotation. An exact spectrum only populates its own scaled eigenvalues; otherwise
    phase estimation leaks amplitude onto every clock value, so all nonzero values are rotated.
    """
    if p.is_exact:
        return sorted({int(v) for v in np.round(p.scaled_eigenvalues)})
    return list(range(1, p.clock_size))


def rotation_ops(p: HhlProblem, layout: RegisterLayout, stage: str = "rotation") -> List[GateOp]:
    """
    One clock-conditioned Ry on the ancilla per value v of rotation_values, with sin(theta/2) = C/v.
    """
    anc = layout.qubits(ANCILLA)[0]
    clock = layout.qubits(CLOCK)
    ops = []
    for value in rotation_values(p):
        ops.append(
            GateOp(
                matrix=ry(rotation_angle(value, p.C)),
                targets=(anc,),
                controls=clock,
                control_values=_bits(value, len(clock)),
                label="Ry",
                stage=stage,
            )
        )
    return ops


def build_hhl_circuit(p: HhlProblem) -> Circuit:
    """
    Phase estimation, eigenvalue-conditioned rotation and uncomputation.
    Registers: anc (1 qubit, heralds on 1), clock (m qubits), work (log2 N qubits).
    :param p: HHL problem
    :return: Circuit over the HHL layout
    """
    circuit = phase_estimation_circuit(p)
    layout = circuit.layout
    circuit.extend(rotation_ops(p, layout))
    circuit.extend(_estimation_ops(p, layout, stage="uncompute", inverse=True))
    logger.debug(f"Built HHL circuit | m: {p.m} | Qubits: {layout.total_qubits} | Ops: {len(circuit)}")
    return circuit
