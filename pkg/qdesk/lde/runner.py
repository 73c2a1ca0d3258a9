from typing import Dict, Optional

import attr
import numpy as np

from qdesk.lde.circuit import BRANCH, TAYLOR, build_circuit
from qdesk.lde.coefficients import TaylorCoefficients, taylor_coeffs
from qdesk.lde.encoding import build_encoding
from qdesk.lde.oracles import classical_exact, classical_taylor, truncation_bound
from qdesk.lde.problem import LdeProblem
from qdesk.shared.log import get_logger
from qdesk.shared.settings import Settings, resolve
from qdesk.shared.utils import fidelity
from qdesk.simulator import GateCountLedger


@attr.s(frozen=True, eq=False)
class LdeResult(object):
    state: np.ndarray = attr.ib()
    success_prob: float = attr.ib()
    ledger: GateCountLedger = attr.ib()
    coefficients: TaylorCoefficients = attr.ib()
    fidelity_vs_oracle: float = attr.ib()
    fidelity_vs_exact: float = attr.ib()
    expected_success_prob: float = attr.ib()
    truncation_error: float = attr.ib()
    truncation_bound: float = attr.ib()
    seed: int = attr.ib()

    def to_json(self) -> Dict:
        return {
            "state": self.state,
            "success_prob": self.success_prob,
            "expected_success_prob": self.expected_success_prob,
            "fidelity_vs_oracle": self.fidelity_vs_oracle,
            "fidelity_vs_exact": self.fidelity_vs_exact,
            "truncation_error": self.truncation_error,
            "truncation_bound": self.truncation_bound,
            "coefficients": self.coefficients.to_json(),
            "ledger": self.ledger.to_json(),
            "seed": self.seed,
        }


class LdeRunner(object):
    """
    Executes the Taylor-series circuit and compares its heralded branch with the classical oracles.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = resolve(settings)
        self.logger = get_logger("lde.runner")

    def run(self, p: LdeProblem, seed: Optional[int] = None) -> LdeResult:
        """
        :param p: Problem with unitary A
        :param seed: Seed of the encoding completions, the configured default when None
        :return: LdeResult holding the post-selected work-register state
        """
        seed = self.settings.default_seed if seed is None else seed
        tc = taylor_coeffs(p)
        gates = build_encoding(tc, seed=seed)
        circuit = build_circuit(p, gates, settings=self.settings)
        final = circuit.run(settings=self.settings)

        after_branch, p_branch = final.post_select(BRANCH, 0, settings=self.settings)
        work, p_taylor = after_branch.post_select(TAYLOR, 0, settings=self.settings)
        success_prob = p_branch * p_taylor

        x_taylor = classical_taylor(p)
        x_exact = classical_exact(p)
        expected = float(np.linalg.norm(x_taylor) ** 2 / tc.Nnorm ** 4)
        result = LdeResult(
            state=work.amplitudes,
            success_prob=success_prob,
            ledger=final.ledger,
            coefficients=tc,
            fidelity_vs_oracle=fidelity(work.amplitudes, x_taylor),
            fidelity_vs_exact=fidelity(work.amplitudes, x_exact),
            expected_success_prob=expected,
            truncation_error=float(np.linalg.norm(x_taylor - x_exact)),
            truncation_bound=truncation_bound(p),
            seed=seed,
        )
        self.logger.info(
            f"LDE run | N: {p.size} | k: {p.k} | Success: {success_prob} | Fidelity: {result.fidelity_vs_oracle} | "
            f"Elementary: {final.ledger.elementary_count}"
        )
        return result


def run(p: LdeProblem, seed: Optional[int] = None, settings: Optional[Settings] = None) -> LdeResult:
    return LdeRunner(settings=settings).run(p, seed=seed)
