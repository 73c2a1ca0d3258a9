from typing import Dict, Optional

import attr
import numpy as np

from qdesk.hhl.circuit import ANCILLA, CLOCK, build_hhl_circuit, hhl_layout, phase_estimation_circuit
from qdesk.hhl.problem import HhlProblem
from qdesk.ledger.algorithms import hhl_algo_term
from qdesk.ledger.term import ComplexityTerm
from qdesk.shared.log import get_logger
from qdesk.shared.settings import Settings, resolve
from qdesk.shared.utils import fidelity, normalize
from qdesk.simulator import GateCountLedger, StateVector


@attr.s(frozen=True, eq=False)
class HhlResult(object):
    state: np.ndarray = attr.ib()
    herald_prob: float = attr.ib()
    fidelity_vs_oracle: float = attr.ib()
    ledger: GateCountLedger = attr.ib()
    clock_residual: float = attr.ib()
    clock_zero_prob: float = attr.ib()
    expected_herald_prob: float = attr.ib()
    exact_spectrum: bool = attr.ib()

    def to_json(self) -> Dict:
        return {
            "state": self.state,
            "herald_prob": self.herald_prob,
            "expected_herald_prob": self.expected_herald_prob,
            "fidelity_vs_oracle": self.fidelity_vs_oracle,
            "clock_residual": self.clock_residual,
            "clock_zero_prob": self.clock_zero_prob,
            "exact_spectrum": self.exact_spectrum,
            "ledger": self.ledger.to_json(),
        }


def classical_solution(p: HhlProblem) -> np.ndarray:
    return normalize(np.linalg.solve(p.A, p.b))


def herald_probability(p: HhlProblem) -> float:
    """
    sum_j |C beta_j / lambda~_j|^2 with beta_j = <u_j|b>. Equals the circuit's herald probability when
    every scaled eigenvalue is an exact clock value.
    """
    values, vectors = p.eigensystem()
    beta = vectors.conj().T @ p.b
    scaled = values * p.t0 / (2 * np.pi)
    return float(np.sum(np.abs(p.C * beta / scaled) ** 2))


def clock_readout(p: HhlProblem, vector: np.ndarray, settings: Optional[Settings] = None) -> np.ndarray:
    """
    Clock-register distribution after phase estimation with `vector` loaded on the work register.
    """
    layout = hhl_layout(p)
    ancilla_and_clock = np.zeros(2 ** (1 + p.m), dtype=complex)
    ancilla_and_clock[0] = 1.0
    start = StateVector(layout=layout, amplitudes=np.kron(normalize(vector), ancilla_and_clock))
    final = phase_estimation_circuit(p, include_prep=False).run(start, settings=settings)
    return final.marginal(CLOCK)


def hhl_gate_complexity(p: HhlProblem, s: float, t: float) -> ComplexityTerm:
    """
    Ledger figure m^2 + s^2 t log(N) + log(N) for an s-sparse A. The simulator's own measured counts live on
    HhlResult.ledger.
    """
    return hhl_algo_term(p.m, s, t, p.size)


class HhlRunner(object):
    def __init__(self, settings: Optional[Settings] = None):
        self.settings = resolve(settings)
        self.logger = get_logger("hhl.runner")

    def run(self, p: HhlProblem) -> HhlResult:
        """
        Runs the three stages, heralds the ancilla on 1 and reads the work register with the clock back on 0.
        :param p: HHL problem
        :return: HhlResult
        """
        circuit = build_hhl_circuit(p)
        final = circuit.run(settings=self.settings)
        clock = final.marginal(CLOCK)
        residual = float(np.sum(clock[1:]))
        heralded, herald_prob = final.post_select(ANCILLA, 1, settings=self.settings)
        work, clock_zero = heralded.post_select(CLOCK, 0, settings=self.settings)
        if not p.is_exact:
            self.logger.warning(f"Inexact spectrum | m: {p.m} | Clock residual: {residual}")
        result = HhlResult(
            state=work.amplitudes,
            herald_prob=herald_prob,
            fidelity_vs_oracle=fidelity(work.amplitudes, classical_solution(p)),
            ledger=final.ledger,
            clock_residual=residual,
            clock_zero_prob=clock_zero,
            expected_herald_prob=herald_probability(p),
            exact_spectrum=p.is_exact,
        )
        self.logger.info(
            f"HHL run | N: {p.size} | m: {p.m} | Herald: {herald_prob} | Fidelity: {result.fidelity_vs_oracle} | "
            f"Elementary: {final.ledger.elementary_count}"
        )
        return result


def run_hhl(p: HhlProblem, settings: Optional[Settings] = None) -> HhlResult:
    return HhlRunner(settings=settings).run(p)
