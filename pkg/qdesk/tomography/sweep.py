from typing import List, Optional, Sequence

from qdesk.shared.errors import InvalidInputError
from qdesk.shared.replies import CsvReply
from qdesk.shared.settings import Settings
from qdesk.tomography.planner import TomographyPlan, sample_bound

SWEEP_HEADER = ["delta", "epsilon", "N", "M"]


def budget_sweep(
    deltas: Sequence[float],
    epsilons: Sequence[float],
    sizes: Sequence[int],
    p: float = 1.0,
    settings: Optional[Settings] = None,
) -> List[list]:
    """
    Uniform-plan copies M over a (delta, epsilon, N) grid.
    """
    if not deltas or not epsilons or not sizes:
        raise InvalidInputError("Sweep ranges must be nonempty")
    rows = []
    for delta in deltas:
        for epsilon in epsilons:
            for size in sizes:
                budget = sample_bound(TomographyPlan.uniform(delta, epsilon, size, p), settings=settings)
                rows.append([delta, epsilon, size, budget.max_budget])
    return rows


def sweep_reply(name: str, rows: List[list]) -> CsvReply:
    return CsvReply(name=name, header=SWEEP_HEADER, rows=rows)
