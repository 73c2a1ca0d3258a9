from enum import Enum
from typing import Dict, Optional

import attr
import numpy as np

from qdesk.ledger.term import LOG2_N, LOG_N, N, N2, N_LOG2_N, N_LOG_N, SQRT_N, ComplexityTerm
from qdesk.shared.errors import InvalidInputError
from qdesk.shared.log import get_logger
from qdesk.shared.utils import is_power_of_two
from qdesk.stateprep.synthesis import synthesize_prep
from qdesk.stateprep.target import TargetState

logger = get_logger("stateprep.costs")


class PrepScheme(Enum):
    DirectManipulation = "DM"
    ConventionalQRAM = "qRAM"
    BucketBrigadeQRAM = "BB-qRAM"
    FlipFlopQRAM = "FF-qRAM"


# per-preparation gate figure of each scheme
QUERY_TERMS: Dict[PrepScheme, ComplexityTerm] = {
    PrepScheme.DirectManipulation: N_LOG2_N,
    PrepScheme.ConventionalQRAM: N,
    PrepScheme.BucketBrigadeQRAM: LOG2_N,
    PrepScheme.FlipFlopQRAM: LOG_N,
}

# cost of m repeated memory queries
REPEATED_QUERY_TERMS: Dict[PrepScheme, ComplexityTerm] = {
    PrepScheme.ConventionalQRAM: N2,
    PrepScheme.BucketBrigadeQRAM: LOG2_N,
    PrepScheme.FlipFlopQRAM: LOG_N,
}


@attr.s(frozen=True)
class PrepCost(object):
    scheme: PrepScheme = attr.ib()
    size: int = attr.ib()
    term: ComplexityTerm = attr.ib()
    numeric: float = attr.ib()
    encode: Optional[ComplexityTerm] = attr.ib(default=None)
    data_encoding: Optional[ComplexityTerm] = attr.ib(default=None)
    repeated_queries: Optional[ComplexityTerm] = attr.ib(default=None)
    measured: Optional[int] = attr.ib(default=None)

    def to_json(self) -> Dict:
        out = {
            "scheme": self.scheme.value,
            "N": self.size,
            "term": self.term.render(),
            "numeric": self.numeric,
            "measured": self.measured,
        }
        for name in ("encode", "data_encoding", "repeated_queries"):
            value = getattr(self, name)
            if value is not None:
                out[name] = {"term": value.render(), "numeric": value.evaluate(N=self.size)}
        return out


def random_target(size: int, seed: int, real: bool = False) -> TargetState:
    """
    Seeded random target. `real` draws nonnegative real amplitudes, which skip the phase stage.
    """
    rng = np.random.default_rng(seed)
    vector = rng.normal(size=size)
    if real:
        vector = np.abs(vector)
    else:
        vector = vector + 1j * rng.normal(size=size)
    return TargetState.normalized(vector)


def measured_prep_count(target: TargetState) -> int:
    return synthesize_prep(target).ledger().elementary_count


def prep_cost(
    scheme: PrepScheme,
    size: int,
    measure: bool = False,
    target: Optional[TargetState] = None,
    seed: int = 0,
    queries: Optional[int] = None,
    data_encoding: bool = False,
) -> PrepCost:
    """
    Gate cost of preparing an N-amplitude state under a scheme, unit constants.
    :param scheme: Preparation scheme
    :param size: N, a power of two >= 2
    :param measure: For DirectManipulation, also synthesize a circuit and report its elementary count
    :param target: State to synthesize when measuring, a seeded random complex state when None
    :param seed: Seed of the random target
    :param queries: Number m of memory queries (qRAM schemes), adds the m-query term
    :param data_encoding: Add the O(sqrt(N)) memory-cell data-encoding term (qRAM schemes)
    :return: PrepCost
    """
    if size < 2 or not is_power_of_two(size):
        raise InvalidInputError(f"N must be a power of two >= 2, got {size}")
    term = QUERY_TERMS[scheme]
    measured = None
    if scheme is PrepScheme.DirectManipulation and measure:
        target = random_target(size, seed) if target is None else target
        if target.size != size:
            raise InvalidInputError(f"Target size {target.size} does not match N={size}")
        measured = measured_prep_count(target)
        logger.info(f"Measured DM preparation | N: {size} | Elementary: {measured}")
    is_qram = scheme is not PrepScheme.DirectManipulation
    repeated = None
    if is_qram and queries is not None:
        if queries < 1:
            raise InvalidInputError(f"queries must be positive, got {queries}")
        repeated = ComplexityTerm.primitive(queries) * REPEATED_QUERY_TERMS[scheme]
    return PrepCost(
        scheme=scheme,
        size=size,
        term=term,
        numeric=term.evaluate(N=size),
        encode=N_LOG_N if scheme is PrepScheme.FlipFlopQRAM else None,
        data_encoding=SQRT_N if (is_qram and data_encoding) else None,
        repeated_queries=repeated,
        measured=measured,
    )
