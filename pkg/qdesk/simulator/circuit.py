import json
from typing import Dict, Iterable, List, Optional

import numpy as np

from qdesk.shared.errors import InvalidInputError
from qdesk.shared.log import get_logger
from qdesk.shared.settings import Settings, resolve
from qdesk.simulator.checks import op_fits_layout
from qdesk.simulator.gateop import GateOp
from qdesk.simulator.layout import RegisterLayout
from qdesk.simulator.ledger import GateCountLedger
from qdesk.simulator.statevector import StateVector, apply


class Circuit(object):
    """
    Ordered list of gate ops over a fixed register layout.
    """

    def __init__(self, layout: RegisterLayout, ops: Optional[Iterable[GateOp]] = None):
        self.layout = layout
        self.ops: List[GateOp] = []
        self.logger = get_logger("simulator.circuit")
        for op in ops or []:
            self.add(op)

    def __len__(self) -> int:
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def add(self, op: GateOp) -> "Circuit":
        check = op_fits_layout(op=op, layout=self.layout)
        if not check.success:
            raise InvalidInputError(check.error)
        self.ops.append(op)
        return self

    def extend(self, ops: Iterable[GateOp]) -> "Circuit":
        for op in ops:
            self.add(op)
        return self

    def then(self, other: "Circuit") -> "Circuit":
        if other.layout != self.layout:
            raise InvalidInputError(f"Cannot concatenate circuits over {self.layout.names} and {other.layout.names}")
        return Circuit(layout=self.layout, ops=self.ops + other.ops)

    def inverse(self, stage: Optional[str] = None) -> "Circuit":
        ops = [op.dagger() for op in reversed(self.ops)]
        if stage is not None:
            ops = [op.remapped(range(self.layout.total_qubits), stage=stage) for op in ops]
        return Circuit(layout=self.layout, ops=ops)

    def embed(
        self,
        layout: RegisterLayout,
        register: str,
        controls: Optional[Dict[int, int]] = None,
        stage: Optional[str] = None,
    ) -> "Circuit":
        """
        Places this circuit, which must act on a single-register layout, onto `register` of a bigger layout.
        :param layout: Destination layout
        :param register: Destination register, same width as this circuit
        :param controls: Extra controls added to every op (qubit -> bit value)
        :param stage: Ledger stage label given to every embedded op
        :return: Circuit over the destination layout
        """
        if layout.width(register) != self.layout.total_qubits:
            raise InvalidInputError(
                f"Register {register} has width {layout.width(register)}, circuit needs {self.layout.total_qubits}"
            )
        mapping = layout.qubits(register)
        ops = []
        for op in self.ops:
            moved = op.remapped(mapping, stage=stage, register=register if op.register is not None else None)
            if controls:
                moved = moved.with_controls(controls)
            ops.append(moved)
        return Circuit(layout=layout, ops=ops)

    def run(self, state: Optional[StateVector] = None, settings: Optional[Settings] = None) -> StateVector:
        """
        Executes the circuit. The returned state carries the ledger of everything applied.
        :param state: Start state, |0...0> when None
        :param settings: Tolerances
        :return: Final state
        """
        settings = resolve(settings)
        state = StateVector.zeros(self.layout) if state is None else state
        if state.layout != self.layout:
            raise InvalidInputError(f"State layout {state.layout.names} does not match circuit {self.layout.names}")
        for op in self.ops:
            state = apply(state, op, settings=settings)
        self.logger.debug(f"Ran circuit | Ops: {len(self.ops)} | Elementary: {state.ledger.elementary_count}")
        return state

    def ledger(self) -> GateCountLedger:
        """
        Tally of the circuit without simulating it.
        """
        tally = GateCountLedger()
        for op in self.ops:
            tally = tally.record(op)
        return tally

    def unitary(self, settings: Optional[Settings] = None) -> np.ndarray:
        dim = self.layout.dimension
        columns = []
        for j in range(dim):
            columns.append(self.run(StateVector.basis(self.layout, j), settings=settings).amplitudes)
        return np.stack(columns, axis=1)

    def to_json(self) -> Dict:
        return {"layout": self.layout.to_json(), "ops": [op.to_json() for op in self.ops]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: Dict) -> "Circuit":
        layout = RegisterLayout(registers=data["layout"])
        return cls(layout=layout, ops=[GateOp.from_json(op) for op in data["ops"]])


def run_circuit(circuit: Circuit, state: Optional[StateVector] = None, settings: Optional[Settings] = None):
    final = circuit.run(state=state, settings=settings)
    return final, final.ledger
