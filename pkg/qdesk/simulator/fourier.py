from typing import Optional

from qdesk.shared.settings import Settings
from qdesk.simulator.gateop import CostRule, GateOp
from qdesk.simulator.gates import dft
from qdesk.simulator.layout import RegisterLayout
from qdesk.simulator.statevector import StateVector, apply


def qft_op(layout: RegisterLayout, register: str, inverse: bool = False, stage: str = "main") -> GateOp:
    """
    Fourier transform on a whole register as one op, costed by the textbook decomposition.
    :param layout: Layout holding the register
    :param register: Register name
    :param inverse: Build the inverse transform
    :param stage: Ledger stage label
    :return: Gate op
    """
    width = layout.width(register)
    matrix = dft(width)
    if inverse:
        matrix = matrix.conj().T
    return GateOp(
        matrix=matrix,
        targets=layout.qubits(register),
        label="IQFT" if inverse else "QFT",
        stage=stage,
        register=register,
        rule=CostRule.FOURIER,
    )


def qft(state: StateVector, register: str, settings: Optional[Settings] = None) -> StateVector:
    return apply(state, qft_op(state.layout, register), settings=settings)


def iqft(state: StateVector, register: str, settings: Optional[Settings] = None) -> StateVector:
    return apply(state, qft_op(state.layout, register, inverse=True), settings=settings)
