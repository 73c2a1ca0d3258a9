from typing import Dict, Optional, Tuple, Union

import attr
import numpy as np

from qdesk.shared.errors import HeraldingError, InvalidInputError, ToleranceError
from qdesk.shared.log import get_logger
from qdesk.shared.settings import Settings, resolve
from qdesk.simulator.gateop import GateOp
from qdesk.simulator.layout import RegisterLayout
from qdesk.simulator.ledger import GateCountLedger

logger = get_logger("simulator")


def _as_amplitudes(value) -> np.ndarray:
    return np.array(value, dtype=complex).ravel()


@attr.s(frozen=True, eq=False)
class StateVector(object):
    """
    Normalized amplitudes over a register layout, together with the ledger of every op applied so far.
    Basis index i holds qubit q in bit q of i.
    """

    layout: RegisterLayout = attr.ib()
    amplitudes: np.ndarray = attr.ib(converter=_as_amplitudes)
    ledger: GateCountLedger = attr.ib(factory=GateCountLedger)

    def __attrs_post_init__(self):
        if self.amplitudes.shape != (self.layout.dimension,):
            raise InvalidInputError(
                f"Amplitude vector length {self.amplitudes.shape[0]} does not match layout dimension "
                f"{self.layout.dimension}"
            )

    @classmethod
    def zeros(cls, layout: RegisterLayout) -> "StateVector":
        amplitudes = np.zeros(layout.dimension, dtype=complex)
        amplitudes[0] = 1.0
        return cls(layout=layout, amplitudes=amplitudes)

    @classmethod
    def basis(cls, layout: RegisterLayout, index: int) -> "StateVector":
        amplitudes = np.zeros(layout.dimension, dtype=complex)
        amplitudes[index] = 1.0
        return cls(layout=layout, amplitudes=amplitudes)

    @classmethod
    def from_amplitudes(cls, layout: RegisterLayout, amplitudes, tol: float = 1e-10) -> "StateVector":
        amplitudes = _as_amplitudes(amplitudes)
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1.0) > tol:
            raise InvalidInputError(f"Amplitudes are not normalized: norm {norm}")
        return cls(layout=layout, amplitudes=amplitudes)

    @property
    def num_qubits(self) -> int:
        return self.layout.total_qubits

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def apply(self, op: GateOp, settings: Optional[Settings] = None) -> "StateVector":
        return apply(self, op, settings=settings)

    def marginal(self, register: str) -> np.ndarray:
        return marginal(self, register)

    def post_select(self, register: str, outcome: Union[str, int], settings: Optional[Settings] = None):
        return post_select(self, register, outcome, settings=settings)

    def sample(self, shots: int, seed: int) -> Dict[int, int]:
        return sample(self, shots, seed)


def apply_matrix(amplitudes: np.ndarray, num_qubits: int, op: GateOp) -> np.ndarray:
    """
    Applies op.matrix to the amplitude tensor restricted to the controlled subspace.
    :param amplitudes: Flat amplitude vector of length 2^num_qubits
    :param num_qubits: Total qubit count
    :param op: Validated gate op
    :return: New flat amplitude vector
    """
    psi = np.array(amplitudes, dtype=complex).reshape([2] * num_qubits)

    def axis(q: int) -> int:
        return num_qubits - 1 - q

    index = [slice(None)] * num_qubits
    for qubit, value in zip(op.controls, op.control_values):
        index[axis(qubit)] = value
    index = tuple(index)
    sub = psi[index]

    control_axes = {axis(q) for q in op.controls}
    remaining = [a for a in range(num_qubits) if a not in control_axes]
    # most significant target first, matching the C-order reshape of the matrix
    sub_axes = [remaining.index(axis(q)) for q in reversed(op.targets)]

    w = op.width
    tensor = op.matrix.reshape([2] * (2 * w))
    moved = np.tensordot(tensor, sub, axes=(list(range(w, 2 * w)), sub_axes))
    psi[index] = np.moveaxis(moved, list(range(w)), sub_axes)
    return psi.reshape(-1)


def apply(state: StateVector, op: GateOp, settings: Optional[Settings] = None) -> StateVector:
    """
    Applies one gate op and records it on the state's ledger.
    :param state: Input state
    :param op: Gate op valid for state.layout
    :param settings: Tolerances, defaults when None
    :return: New state
    """
    settings = resolve(settings)
    op.validate(total_qubits=state.num_qubits, tol=settings.unitary_tol)
    amplitudes = apply_matrix(state.amplitudes, state.num_qubits, op)
    drift = abs(np.linalg.norm(amplitudes) - 1.0)
    if drift > settings.norm_tol:
        raise ToleranceError(f"Norm drifted by {drift} after gate {op.label}")
    return StateVector(layout=state.layout, amplitudes=amplitudes, ledger=state.ledger.record(op))


def _register_view(state: StateVector, register: str) -> np.ndarray:
    offset = state.layout.offset(register)
    width = state.layout.width(register)
    outer = 2 ** (state.num_qubits - offset - width)
    return state.amplitudes.reshape(outer, 2 ** width, 2 ** offset)


def parse_outcome(outcome: Union[str, int], width: int) -> int:
    """
    Register value of an outcome. Bitstrings are written most significant bit first.
    """
    if isinstance(outcome, str):
        if len(outcome) != width or any(c not in "01" for c in outcome):
            raise InvalidInputError(f"Outcome {outcome!r} is not a {width}-bit string")
        return int(outcome, 2)
    value = int(outcome)
    if value < 0 or value >= 2 ** width:
        raise InvalidInputError(f"Outcome {value} out of range for a {width}-qubit register")
    return value


def to_bitstring(value: int, width: int) -> str:
    return format(value, f"0{width}b")


def marginal(state: StateVector, register: str) -> np.ndarray:
    view = _register_view(state, register)
    return np.sum(np.abs(view) ** 2, axis=(0, 2))


def post_select(
    state: StateVector, register: str, outcome: Union[str, int], settings: Optional[Settings] = None
) -> Tuple[StateVector, float]:
    """
    Projects a register onto an outcome and renormalizes the rest.
    :param state: State to measure
    :param register: Register name
    :param outcome: Bitstring (MSB first) or integer register value
    :param settings: Supplies the heralding floor
    :return: Conditional state on the remaining registers and the outcome probability
    """
    settings = resolve(settings)
    width = state.layout.width(register)
    value = parse_outcome(outcome, width)
    branch = _register_view(state, register)[:, value, :].reshape(-1)
    probability = float(np.sum(np.abs(branch) ** 2))
    if probability < settings.herald_floor:
        logger.error(f"Heralding failed | Register: {register} | Outcome: {value} | Probability: {probability}")
        raise HeraldingError(f"Branch {register}={to_bitstring(value, width)} is numerically empty")
    logger.debug(f"Post-selected register: {register} | Outcome: {value} | Probability: {probability}")
    conditional = StateVector(
        layout=state.layout.without(register), amplitudes=branch / np.sqrt(probability), ledger=state.ledger
    )
    return conditional, probability


def sample(state: StateVector, shots: int, seed: int) -> Dict[int, int]:
    """
    Draws computational-basis outcomes from |amplitude|^2.
    :param state: State to sample
    :param shots: Number of draws, at least 1
    :param seed: Seed of the private generator for this call
    :return: Map of basis index to count, totals equal `shots`
    """
    if shots < 1:
        raise InvalidInputError(f"shots must be at least 1, got {shots}")
    probs = state.probabilities()
    probs = probs / probs.sum()
    counts = np.random.default_rng(seed).multinomial(shots, probs)
    return {int(i): int(c) for i, c in enumerate(counts) if c > 0}
