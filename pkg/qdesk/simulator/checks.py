from qdesk.shared.utils import Result
from qdesk.simulator.gateop import GateOp
from qdesk.simulator.layout import RegisterLayout


def op_fits_layout(op: GateOp, layout: RegisterLayout) -> Result[bool]:
    """
    Checks that every qubit of the op exists in the layout and that a named register matches the targets.
    :param op: Gate op
    :param layout: Circuit layout
    :return: Result of the check, with error message if not successful.
    """
    total = layout.total_qubits
    for q in op.targets + op.controls:
        if q < 0 or q >= total:
            return Result.fail(f"Gate {op.label} qubit {q} out of range 0..{total - 1}")
    if set(op.targets) & set(op.controls):
        return Result.fail(f"Gate {op.label} control/target overlap")
    if op.register is not None:
        if not layout.has(op.register):
            return Result.fail(f"Gate {op.label} names unknown register {op.register}")
        if tuple(op.targets) != layout.qubits(op.register):
            return Result.fail(f"Gate {op.label} targets do not cover register {op.register}")
    return Result.ok(True)
