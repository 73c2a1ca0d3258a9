from typing import Dict, List, Optional, Tuple

from qdesk.ledger.report import ORDER_ONLY, compose
from qdesk.ledger.term import C_EPS, ComplexityTerm
from qdesk.shared.replies import TextReply
from qdesk.stateprep.costs import PrepScheme
from qdesk.tomography.schemes import QstScheme

COLUMNS: List[Tuple[str, PrepScheme]] = [
    ("DM/BB-qRAM", PrepScheme.DirectManipulation),
    ("FF-qRAM", PrepScheme.FlipFlopQRAM),
]

# row label -> (scheme, variant whose extra summands print in brackets)
ROWS: List[Tuple[str, QstScheme, Optional[QstScheme]]] = [
    ("SQST/JSM", QstScheme.SQST, None),
    ("MUB", QstScheme.AAPT_MUB_nonlocal, QstScheme.AAPT_MUB_local),
    ("POVM", QstScheme.AAPT_POVM, None),
]

TABLE_FOOTER = f"{ORDER_ONLY} C is the processing cost; [bracketed] summands apply to local measurements."


def _cell(base: ComplexityTerm, variant: Optional[ComplexityTerm] = None) -> str:
    if variant is None:
        return base.render()
    extra = [s for s in variant.summands if s not in base.summands]
    if not extra:
        return base.render()
    inner = " + ".join(s.render() for s in base.summands)
    bracket = " ".join(f"[+ {s.render()}]" for s in extra)
    merged = f"{inner} {bracket}".replace("] [", " ")
    if base.factor.is_unit:
        return merged
    return f"{base.factor.render()}*({merged})"


def table_cells(algo: ComplexityTerm = C_EPS) -> Dict[Tuple[str, str], str]:
    """
    Overall complexity of each (readout row, preparation column) pair. Repeated summands appear once, so the
    DM/BB-qRAM MUB cell reads N^2*(log^2(N) + C [+ log^3(N)]) although both preparation and readout add log^2(N).
    """
    cells = {}
    for row, scheme, variant in ROWS:
        for column, prep in COLUMNS:
            base = compose(prep, scheme, algo).overall
            other = compose(prep, variant, algo).overall if variant is not None else None
            cells[(row, column)] = _cell(base, other)
    return cells


def table_reply(name: str = "complexity_table", algo: ComplexityTerm = C_EPS) -> TextReply:
    cells = table_cells(algo)
    rows = [[row] + [cells[(row, column)] for column, _ in COLUMNS] for row, _, _ in ROWS]
    return TextReply(name=name, header=["Readout"] + [c for c, _ in COLUMNS], rows=rows, footer=TABLE_FOOTER)
