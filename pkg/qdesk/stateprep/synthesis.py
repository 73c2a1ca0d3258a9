from typing import Optional, Tuple

import numpy as np

from qdesk.shared.log import get_logger
from qdesk.simulator import Circuit, GateOp, RegisterLayout
from qdesk.simulator.gates import phase_pair, ry
from qdesk.stateprep.target import TargetState

logger = get_logger("stateprep")

ZERO_ANGLE = 1e-15
WORK_REGISTER = "work"


def _pattern_controls(qubits: Tuple[int, ...], pattern: int) -> Tuple[int, ...]:
    return tuple((pattern >> i) & 1 for i in range(len(qubits)))


def magnitude_stage(magnitudes: np.ndarray, num_qubits: int, stage: str) -> list:
    """
    Amplitude bisection from the most significant qubit down. Qubit q is rotated once per value of the
    qubits above it, splitting each parent block's weight between its lower and upper halves.
    :param magnitudes: |c_i|
    :param num_qubits: n
    :param stage: Ledger stage label
    :return: List of gate ops
    """
    ops = []
    weights = magnitudes ** 2
    for q in range(num_qubits - 1, -1, -1):
        controls = tuple(range(q + 1, num_qubits))
        half = 2 ** q
        blocks = weights.reshape(-1, 2, half).sum(axis=2)
        for pattern, (w0, w1) in enumerate(blocks):
            theta = 2.0 * np.arctan2(np.sqrt(w1), np.sqrt(w0))
            if abs(theta) < ZERO_ANGLE:
                continue
            ops.append(
                GateOp(
                    matrix=ry(theta),
                    targets=(q,),
                    controls=controls,
                    control_values=_pattern_controls(controls, pattern),
                    label="Ry",
                    stage=stage,
                )
            )
    return ops


def phase_stage(phases: np.ndarray, num_qubits: int, stage: str) -> list:
    """
    Multiplexed phase on qubit 0, one pair (phi_2j, phi_2j+1) per value j of the other qubits.
    """
    ops = []
    controls = tuple(range(1, num_qubits))
    for pattern, (phi0, phi1) in enumerate(phases.reshape(-1, 2)):
        if abs(phi0) < ZERO_ANGLE and abs(phi1) < ZERO_ANGLE:
            continue
        ops.append(
            GateOp(
                matrix=phase_pair(phi0, phi1),
                targets=(0,),
                controls=controls,
                control_values=_pattern_controls(controls, pattern),
                label="Phase",
                stage=stage,
            )
        )
    return ops


def synthesize_prep(target: TargetState, stage: str = "prep", layout: Optional[RegisterLayout] = None) -> Circuit:
    """
    Circuit mapping |0...0> to the target using single-qubit and multi-controlled single-qubit gates only.
    :param target: Normalized target amplitudes
    :param stage: Ledger stage label of every op
    :param layout: Single-register layout to build on, a fresh "work" register when None
    :return: Preparation circuit
    """
    n = target.num_qubits
    layout = RegisterLayout.of(**{WORK_REGISTER: n}) if layout is None else layout
    circuit = Circuit(layout=layout)
    circuit.extend(magnitude_stage(np.abs(target.amplitudes), n, stage))
    if not target.is_real_nonnegative:
        circuit.extend(phase_stage(np.angle(target.amplitudes), n, stage))
    logger.debug(f"Synthesized preparation | Qubits: {n} | Ops: {len(circuit)}")
    return circuit


def prepare(vector, stage: str = "prep") -> Circuit:
    """
    Preparation circuit of an arbitrary nonzero vector's direction.
    """
    return synthesize_prep(TargetState.normalized(vector), stage=stage)
