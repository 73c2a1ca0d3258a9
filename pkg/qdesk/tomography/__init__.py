from .planner import (
    SampleBudget,
    TomographyPlan,
    chernoff_constant,
    copies_bound,
    load_plan,
    sample_bound,
)
from .coverage import CoverageReport, coverage_threshold, verify_coverage
from .schemes import QstCost, QstScheme, parse_scheme, qst_cost
from .sweep import SWEEP_HEADER, budget_sweep, sweep_reply
