from typing import Dict, Optional

import attr

from qdesk.ledger.term import LOG2_N, LOG_N, N, ComplexityTerm
from qdesk.shared.log import get_logger
from qdesk.stateprep.costs import QUERY_TERMS, PrepScheme
from qdesk.tomography.schemes import SCHEME_TERMS, QstScheme

logger = get_logger("ledger.report")

ORDER_ONLY = "Order-only figures: unit constants on every term, logarithms base 2."

# preparation column of the overall-complexity table
TABLE_PREP_TERMS: Dict[PrepScheme, ComplexityTerm] = {
    PrepScheme.DirectManipulation: LOG2_N,
    PrepScheme.BucketBrigadeQRAM: LOG2_N,
    PrepScheme.FlipFlopQRAM: LOG_N,
    PrepScheme.ConventionalQRAM: N,
}


@attr.s(frozen=True)
class ComplexityReport(object):
    """
    overall = copies_factor * (prep_term + algo_term + readout_gates).
    `prep_reference` keeps the scheme's stand-alone preparation figure for comparison.
    """

    prep: PrepScheme = attr.ib()
    readout: QstScheme = attr.ib()
    algo_term: ComplexityTerm = attr.ib()
    prep_term: ComplexityTerm = attr.ib()
    readout_gates: ComplexityTerm = attr.ib()
    copies_factor: ComplexityTerm = attr.ib()
    prep_reference: ComplexityTerm = attr.ib()
    measured: Optional[Dict[str, int]] = attr.ib(default=None)

    @property
    def inner(self) -> ComplexityTerm:
        return self.prep_term + self.algo_term + self.readout_gates

    @property
    def overall(self) -> ComplexityTerm:
        return self.copies_factor * self.inner

    def evaluate(self, base: int = 2, **values) -> float:
        return self.overall.evaluate(base=base, **values)

    def with_measured(self, measured: Dict[str, int]) -> "ComplexityReport":
        return attr.evolve(self, measured=dict(measured))

    def to_json(self, **values) -> Dict:
        out = {
            "prep": self.prep.value,
            "readout": self.readout.value,
            "algo_term": self.algo_term.render(),
            "prep_term": self.prep_term.render(),
            "prep_reference": self.prep_reference.render(),
            "readout_gates": self.readout_gates.render(),
            "copies_factor": self.copies_factor.render(),
            "overall": self.overall.render(),
            "caveat": ORDER_ONLY,
            "measured": self.measured,
        }
        if values:
            out["evaluated"] = {"at": values, "overall": self.evaluate(**values)}
        return out


def compose(prep: PrepScheme, readout: QstScheme, algo: ComplexityTerm) -> ComplexityReport:
    """
    End-to-end cost: every copy of the output state pays for its preparation, the processing and one
    measurement round.
    :param prep: Preparation scheme
    :param readout: Tomography scheme
    :param algo: Processing cost C, e.g. lde_algo_term() or the bare symbol C_EPS
    :return: ComplexityReport
    """
    copies, gates = SCHEME_TERMS[readout]
    report = ComplexityReport(
        prep=prep,
        readout=readout,
        algo_term=algo,
        prep_term=TABLE_PREP_TERMS[prep],
        readout_gates=gates,
        copies_factor=copies,
        prep_reference=QUERY_TERMS[prep],
    )
    logger.debug(f"Composed | Prep: {prep.value} | Readout: {readout.value} | Overall: {report.overall.render()}")
    return report
