from typing import Optional

import click

from qdesk.cli.base import at_least, at_most, emit, main, reports_errors, require, run_config, within
from qdesk.cli.config import parse_list
from qdesk.cli.demos import EXPECTATIONS, LDE_DEMOS, pauli_x
from qdesk.lde import LdeRunner, fidelity_within, load_problem, success_scaling
from qdesk.shared.errors import InvalidInputError
from qdesk.shared.log import get_logger
from qdesk.shared.replies import CsvReply, JsonReply

logger = get_logger("cli.lde")

RESULT_HEADER = ["fidelity_vs_oracle", "fidelity_vs_exact", "success_prob", "expected_success_prob"]
SCALING_HEADER = ["N", "p", "copies", "slope"]
ORACLE_TOL = 1e-10
SUCCESS_TOL = 1e-10


@main.command(name="lde")
@click.option("--problem", type=click.Path(), default=None, help="LDE problem JSON.")
@click.option("--demo", type=click.Choice(LDE_DEMOS), default=None, help="Built-in problem.")
@click.option("--k", "order", type=int, default=None, help="Taylor order, overrides the problem's.")
@click.option("--seed", type=int, default=None, help="Seed of the encoding completions.")
@click.option(
    "--t",
    "time",
    type=float,
    default=None,
    help="Evolution time of the diffusion study, lde_scaling_t (0.1) when omitted.",
)
@click.option("--sizes", default="8,16,32,64", show_default=True, help="N values of the diffusion study.")
@click.option("--solution", type=click.Choice(["exact", "taylor"]), default="exact", show_default=True)
@click.option("--delta", type=float, default=0.1, show_default=True, help="Precision of the copies bound.")
@click.option("--epsilon", type=float, default=0.05, show_default=True, help="Failure rate of the copies bound.")
@click.pass_context
@reports_errors
def cmd_lde(
    ctx: click.Context,
    problem: Optional[str],
    demo: Optional[str],
    order: Optional[int],
    seed: Optional[int],
    time: Optional[float],
    sizes: str,
    solution: str,
    delta: float,
    epsilon: float,
):
    """
    Runs the Taylor-series LDE circuit, or the diffusion success-probability study.
    """
    if (problem is None) == (demo is None):
        raise InvalidInputError("Pass exactly one of --problem or --demo")
    if demo == "diffusion-scaling":
        _diffusion(ctx, order or 1, seed, time, sizes, solution, delta, epsilon)
        return

    p = pauli_x(8) if demo == "pauli-x" else load_problem(problem)
    if order is not None:
        p = p.with_order(order)
    config = run_config(ctx, "lde", seed, problem=problem, demo=demo, options={"k": p.k})
    result = LdeRunner(settings=config.settings).run(p, seed=config.seed)

    require(fidelity_within(result.fidelity_vs_oracle, ORACLE_TOL))
    require(within("Success probability", result.success_prob, result.expected_success_prob, SUCCESS_TOL))
    require(at_most("Truncation error", result.truncation_error, result.truncation_bound))
    if demo is not None and p.k >= 8:
        expectation = EXPECTATIONS[demo]
        require(at_least("Fidelity against the exact solution", result.fidelity_vs_exact, expectation.min_fidelity))

    row = [result.fidelity_vs_oracle, result.fidelity_vs_exact, result.success_prob, result.expected_success_prob]
    emit(
        config,
        [
            JsonReply("lde_result", result.to_json(), config=config.to_json()),
            CsvReply("lde_result", RESULT_HEADER, [row]),
        ],
    )


def _diffusion(ctx, order, seed, time, sizes, solution, delta, epsilon):
    Ns = parse_list(sizes, int)
    config = run_config(
        ctx,
        "lde",
        seed,
        demo="diffusion-scaling",
        sweep={"N": Ns},
        options={"k": order, "t": time, "solution": solution, "delta": delta, "epsilon": epsilon},
    )
    if len(Ns) < 2:
        raise InvalidInputError("The diffusion study needs at least two sizes to fit a slope")
    result = success_scaling(
        order, t=time, Ns=Ns, solution=solution, delta=delta, epsilon=epsilon, settings=config.settings
    )
    expected = -4 * order
    tol = EXPECTATIONS["diffusion-scaling"].slope_tol * abs(expected)
    require(within("Fitted slope", result.slope, expected, tol))
    rows = [[point.N, point.success_prob, point.copies, result.slope] for point in result.points]
    emit(
        config,
        [
            JsonReply("lde_scaling", result.to_json(), config=config.to_json()),
            CsvReply("lde_scaling", SCALING_HEADER, rows),
        ],
    )
