from .layout import RegisterLayout
from .gateop import CostRule, GateKind, GateOp, elementary_cost, fourier_count
from .ledger import GateCountLedger
from .statevector import StateVector, apply, marginal, parse_outcome, post_select, sample, to_bitstring
from .fourier import iqft, qft, qft_op
from .circuit import Circuit, run_circuit
