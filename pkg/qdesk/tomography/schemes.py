from enum import Enum
from typing import Dict, Tuple

import attr

from qdesk.ledger.term import LOG2_N, LOG3_N, LOG_N, N2, N4, ONE, R_N_LOG2N, R_N_LOGN, ComplexityTerm
from qdesk.shared.errors import InvalidInputError
from qdesk.shared.utils import is_power_of_two


class QstScheme(Enum):
    SQST = "SQST"
    AAPT_JSM = "AAPT-JSM"
    AAPT_MUB_nonlocal = "AAPT-MUB"
    AAPT_MUB_local = "AAPT-MUB-local"
    AAPT_POVM = "AAPT-POVM"
    CompressedSensing = "CS"
    QPCA = "QPCA"
    LinearRegression = "LR"

    @property
    def uses_rank(self) -> bool:
        return self in (QstScheme.CompressedSensing, QstScheme.QPCA)


# scheme -> (copies of the state, gates per measurement)
SCHEME_TERMS: Dict[QstScheme, Tuple[ComplexityTerm, ComplexityTerm]] = {
    QstScheme.SQST: (N4, LOG_N),
    QstScheme.AAPT_JSM: (N4, LOG_N),
    QstScheme.LinearRegression: (N4, LOG_N),
    QstScheme.AAPT_MUB_nonlocal: (N2, LOG2_N),
    QstScheme.AAPT_MUB_local: (N2, LOG3_N),
    QstScheme.AAPT_POVM: (ONE, N4),
    QstScheme.CompressedSensing: (ONE, R_N_LOG2N),
    QstScheme.QPCA: (ONE, R_N_LOGN),
}


def parse_scheme(value: str) -> QstScheme:
    for scheme in QstScheme:
        if value in (scheme.value, scheme.name):
            return scheme
    raise InvalidInputError(f"Unknown tomography scheme: {value}")


@attr.s(frozen=True)
class QstCost(object):
    scheme: QstScheme = attr.ib()
    size: int = attr.ib()
    rank: int = attr.ib()
    copies: ComplexityTerm = attr.ib()
    gates_per_measurement: ComplexityTerm = attr.ib()

    @property
    def overall(self) -> ComplexityTerm:
        return self.copies * self.gates_per_measurement

    def numeric(self, term: ComplexityTerm) -> float:
        return term.evaluate(N=self.size, R=self.rank)

    def to_json(self) -> Dict:
        return {
            "scheme": self.scheme.value,
            "N": self.size,
            "R": self.rank,
            "copies": {"term": self.copies.render(), "numeric": self.numeric(self.copies)},
            "gates_per_measurement": {
                "term": self.gates_per_measurement.render(),
                "numeric": self.numeric(self.gates_per_measurement),
            },
            "overall": {"term": self.overall.render(), "numeric": self.numeric(self.overall)},
        }


def qst_cost(scheme: QstScheme, N: int, R: int = 1) -> QstCost:
    """
    Readout cost of a tomography scheme with unit constants: overall = copies x gates per measurement.
    Compressed sensing and QPCA figures are total time steps spread over a single copy.
    :param scheme: Tomography scheme
    :param N: State dimension, a power of two
    :param R: Rank of the density matrix (compressed sensing, QPCA)
    :return: QstCost
    """
    if N < 2 or not is_power_of_two(N):
        raise InvalidInputError(f"N must be a power of two >= 2, got {N}")
    if R < 1:
        raise InvalidInputError(f"Rank must be at least 1, got {R}")
    copies, gates = SCHEME_TERMS[scheme]
    return QstCost(scheme=scheme, size=N, rank=R, copies=copies, gates_per_measurement=gates)
