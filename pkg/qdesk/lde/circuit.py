from typing import List, Optional

import numpy as np

from qdesk.lde.checks import problem_runs_as_circuit
from qdesk.lde.encoding import EncodingGates
from qdesk.lde.problem import LdeProblem
from qdesk.shared.errors import InvalidInputError
from qdesk.shared.log import get_logger
from qdesk.shared.settings import Settings, resolve
from qdesk.simulator import Circuit, CostRule, GateOp, RegisterLayout
from qdesk.stateprep import prepare

logger = get_logger("lde.circuit")

BRANCH = "branch"
TAYLOR = "taylor"
WORK = "work"


def lde_layout(p: LdeProblem, g: EncodingGates) -> RegisterLayout:
    return RegisterLayout(registers=[(BRANCH, 1), (TAYLOR, g.taylor_qubits), (WORK, p.num_qubits)])


def evolution_blocks(p: LdeProblem) -> List[np.ndarray]:
    """
    A^m for m = 0..k.
    """
    return [np.linalg.matrix_power(p.A, m) for m in range(p.k + 1)]


def _bits(value: int, width: int):
    return tuple((value >> i) & 1 for i in range(width))


def _encoding_ops(layout: RegisterLayout, g: EncodingGates, stage: str, inverse: bool) -> List[GateOp]:
    branch = layout.qubits(BRANCH)[0]
    taylor = layout.qubits(TAYLOR)

    def gate(matrix, label, controls=(), values=(), register=None, targets=taylor):
        if inverse:
            matrix, label = matrix.conj().T, f"{label}†"
        return GateOp(
            matrix=matrix,
            targets=targets,
            controls=controls,
            control_values=values,
            label=label,
            stage=stage,
            register=register,
        )

    V = gate(g.V, "V", targets=(branch,))
    V_S1 = gate(g.V_S1, "V_S1", controls=(branch,), values=(0,), register=TAYLOR)
    V_S2 = gate(g.V_S2, "V_S2", controls=(branch,), values=(1,), register=TAYLOR)
    return [V_S1, V_S2, V] if inverse else [V, V_S1, V_S2]


def build_circuit(p: LdeProblem, g: EncodingGates, settings: Optional[Settings] = None) -> Circuit:
    """
    Encoding, evolution and decoding of the Taylor-series solver.
    Registers: branch (1 qubit), taylor (log2 of the padded order count), work (log2 N).
    :param p: Problem with unitary A = M/|M|
    :param g: Encoding gates for the problem's coefficients
    :param settings: Supplies the unitarity tolerance
    :return: Circuit whose all-zero ancilla branch holds x_taylor / Nnorm^2
    """
    settings = resolve(settings)
    check = problem_runs_as_circuit(p, tol=settings.unitary_tol)
    if not check.success:
        raise InvalidInputError(check.error)
    if 2 ** g.taylor_qubits < p.k + 1:
        raise InvalidInputError(f"Encoding gates hold {2 ** g.taylor_qubits} branches, order {p.k} needs {p.k + 1}")
    g.check(tol=settings.unitary_tol)

    layout = lde_layout(p, g)
    branch = layout.qubits(BRANCH)[0]
    taylor = layout.qubits(TAYLOR)
    work = layout.qubits(WORK)

    circuit = Circuit(layout=layout)
    circuit.extend(_encoding_ops(layout, g, stage="encoding", inverse=False))
    if np.linalg.norm(p.x0) > 0:
        circuit = circuit.then(prepare(p.x0).embed(layout, WORK, controls={branch: 0}, stage="encoding"))
    if np.linalg.norm(p.b) > 0:
        circuit = circuit.then(prepare(p.b).embed(layout, WORK, controls={branch: 1}, stage="encoding"))

    for m, block in enumerate(evolution_blocks(p)):
        if m == 0:
            continue
        circuit.add(
            GateOp(
                matrix=block,
                targets=work,
                controls=taylor,
                control_values=_bits(m, len(taylor)),
                label=f"U_{m}",
                stage="evolution",
                register=WORK,
                rule=CostRule.ORACLE,
            )
        )

    circuit.extend(_encoding_ops(layout, g, stage="decoding", inverse=True))
    logger.debug(f"Built LDE circuit | k: {p.k} | Qubits: {layout.total_qubits} | Ops: {len(circuit)}")
    return circuit
