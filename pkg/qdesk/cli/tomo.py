from typing import Optional

import click
import numpy as np

from qdesk.cli.base import emit, main, reports_errors, run_config
from qdesk.cli.config import parse_list
from qdesk.shared.errors import HeraldingError, InvalidInputError
from qdesk.shared.log import get_logger
from qdesk.shared.replies import CsvReply, JsonReply
from qdesk.shared.utils import is_power_of_two, log2_int
from qdesk.simulator import RegisterLayout, StateVector
from qdesk.tomography import TomographyPlan, budget_sweep, load_plan, sample_bound, sweep_reply, verify_coverage

logger = get_logger("cli.tomo")

BUDGET_HEADER = ["outcome", "p_m", "budget"]
COVERAGE_HEADER = ["outcome", "budget", "coverage", "passed"]


def coverage_state(plan: TomographyPlan) -> Optional[StateVector]:
    """
    State whose basis outcomes occur with the plan's probabilities, when the plan describes one.
    """
    if abs(plan.total - 1.0) > 1e-12 or not is_power_of_two(plan.size) or plan.size < 2:
        return None
    layout = RegisterLayout.of(work=log2_int(plan.size))
    return StateVector(layout=layout, amplitudes=np.sqrt(plan.weights))


@main.command(name="tomo")
@click.option("--plan", "plan_path", type=click.Path(), default=None, help="Tomography plan JSON.")
@click.option("--uniform-n", type=int, default=None, help="N equally likely outcomes.")
@click.option("--p", "total", type=float, default=1.0, show_default=True, help="Success probability of the copy.")
@click.option("--delta", type=float, default=0.1, show_default=True)
@click.option("--epsilon", type=float, default=0.05, show_default=True)
@click.option("--trials", type=int, default=200, show_default=True, help="Coverage trials, 0 skips coverage.")
@click.option("--workers", type=int, default=None, help="Threads for the coverage trials.")
@click.option("--seed", type=int, default=None)
@click.option("--sweep-n", default=None, help="Comma list of N for a budget sweep.")
@click.option("--sweep-delta", default=None, help="Comma list of delta for a budget sweep.")
@click.option("--sweep-epsilon", default=None, help="Comma list of epsilon for a budget sweep.")
@click.pass_context
@reports_errors
def cmd_tomo(
    ctx: click.Context,
    plan_path: Optional[str],
    uniform_n: Optional[int],
    total: float,
    delta: float,
    epsilon: float,
    trials: int,
    workers: Optional[int],
    seed: Optional[int],
    sweep_n: Optional[str],
    sweep_delta: Optional[str],
    sweep_epsilon: Optional[str],
):
    """
    Plans per-outcome sample budgets and checks them by Monte Carlo.
    """
    if (plan_path is None) == (uniform_n is None):
        raise InvalidInputError("Pass exactly one of --plan or --uniform-n")
    plan = load_plan(plan_path) if plan_path else TomographyPlan.uniform(delta, epsilon, uniform_n, total)
    sweep = {}
    if sweep_n or sweep_delta or sweep_epsilon:
        sweep = {
            "N": parse_list(sweep_n, int) or [plan.size],
            "delta": parse_list(sweep_delta, float) or [plan.delta],
            "epsilon": parse_list(sweep_epsilon, float) or [plan.epsilon],
        }
    config = run_config(
        ctx,
        "tomo",
        seed,
        problem=plan_path,
        sweep=sweep,
        options={"trials": trials, "workers": workers, "p": total},
    )
    budget = sample_bound(plan, settings=config.settings)
    rows = [[m, float(p), b] for m, (p, b) in enumerate(zip(plan.probs, budget.budgets))]
    replies = [CsvReply("tomo_budgets", BUDGET_HEADER, rows)]
    payload = {"budget": budget.to_json()}

    coverage = None
    state = coverage_state(plan) if trials else None
    if trials and state is None:
        logger.warning("Coverage skipped | The plan's probabilities do not form a state on qubits")
    if state is not None:
        budgets = {m: b for m, b in enumerate(budget.budgets)}
        coverage = verify_coverage(state, budgets, plan.delta, plan.epsilon, trials, config.seed, workers=workers)
        payload["coverage"] = coverage.to_json()
        replies.append(CsvReply("tomo_coverage", COVERAGE_HEADER, coverage.rows()))

    if sweep:
        rows = budget_sweep(sweep["delta"], sweep["epsilon"], sweep["N"], p=total, settings=config.settings)
        replies.append(sweep_reply("tomo_sweep", rows))

    replies.insert(0, JsonReply("tomo_report", payload, config=config.to_json()))
    emit(config, replies)
    if coverage is not None and not coverage.passed:
        raise HeraldingError(f"Coverage below {coverage.threshold} for outcomes {coverage.failing}")
