from typing import Dict, List, Optional, Sequence, Tuple, Union

import attr

from qdesk.ledger.report import ComplexityReport
from qdesk.ledger.term import ComplexityTerm
from qdesk.shared.errors import InvalidInputError
from qdesk.shared.log import get_logger
from qdesk.simulator import GateCountLedger

logger = get_logger("ledger.crosscheck")

MIN_SIZES = 3
DRIFT_ALARM = 2.0

Measurement = Union[GateCountLedger, int]


@attr.s(frozen=True)
class CrosscheckRow(object):
    params: Dict[str, float] = attr.ib()
    measured: int = attr.ib()
    analytic: float = attr.ib()

    @property
    def ratio(self) -> float:
        return self.measured / self.analytic


@attr.s(frozen=True)
class CrosscheckTable(object):
    term: ComplexityTerm = attr.ib()
    rows: List[CrosscheckRow] = attr.ib()

    @property
    def ratios(self) -> List[float]:
        return [row.ratio for row in self.rows]

    @property
    def drift(self) -> float:
        return max(self.ratios) / min(self.ratios)

    @property
    def alarm(self) -> bool:
        return self.drift > DRIFT_ALARM

    def csv_rows(self) -> List[list]:
        return [[dict(sorted(r.params.items())), r.measured, r.analytic, r.ratio] for r in self.rows]

    def to_json(self) -> Dict:
        return {
            "term": self.term.render(),
            "drift": self.drift,
            "alarm": self.alarm,
            "rows": [
                {"params": r.params, "measured": r.measured, "analytic": r.analytic, "ratio": r.ratio}
                for r in self.rows
            ],
        }


def _count(measurement: Measurement, stage: Optional[str] = None) -> int:
    if isinstance(measurement, GateCountLedger):
        return measurement.stage(stage) if stage else measurement.elementary_count
    return int(measurement)


REPORT_PARTS = {
    "prep": "prep_term",
    "algo": "algo_term",
    "readout": "readout_gates",
    "copies": "copies_factor",
    "overall": "overall",
}


def _figure(source: Union[ComplexityTerm, ComplexityReport], part: str) -> ComplexityTerm:
    if isinstance(source, ComplexityTerm):
        return source
    if part not in REPORT_PARTS:
        raise InvalidInputError(f"Unknown report part {part!r}, expected one of {sorted(REPORT_PARTS)}")
    return getattr(source, REPORT_PARTS[part])


def crosscheck_measured(
    source: Union[ComplexityTerm, ComplexityReport],
    samples: Sequence[Tuple[Dict[str, float], Measurement]],
    stage: Optional[str] = None,
    part: str = "overall",
) -> CrosscheckTable:
    """
    Measured over analytic ratio per parameter point. A ratio that drifts by more than 2x across the points
    means the measured counts do not follow the claimed order.
    :param source: Composed report, or a bare analytic figure; unit constants
    :param samples: (parameters, ledger or count) pairs, at least three
    :param stage: Compare only this ledger stage
    :param part: Which report term the measurements stand for (prep, algo, readout, copies, overall)
    :return: CrosscheckTable
    """
    term = _figure(source, part)
    if len(samples) < MIN_SIZES:
        raise InvalidInputError(f"Cross-checks need measurements at {MIN_SIZES} or more sizes, got {len(samples)}")
    rows = []
    for params, measurement in samples:
        analytic = term.evaluate(**params)
        if analytic <= 0:
            raise InvalidInputError(f"Analytic figure {term.render()} is not positive at {params}")
        rows.append(CrosscheckRow(params=dict(params), measured=_count(measurement, stage), analytic=analytic))
    table = CrosscheckTable(term=term, rows=rows)
    if table.alarm:
        logger.warning(f"Order drift | Term: {term.render()} | Drift: {table.drift}")
    else:
        logger.debug(f"Order consistent | Term: {term.render()} | Drift: {table.drift}")
    return table
