from typing import Optional

import click

from qdesk.cli.base import at_least, at_most, emit, main, reports_errors, require, run_config, within
from qdesk.cli.demos import EXPECTATIONS, HHL_DEMOS
from qdesk.hhl import HhlRunner, hhl_gate_complexity, load_problem, snap_spectrum
from qdesk.shared.errors import InvalidInputError
from qdesk.shared.log import get_logger
from qdesk.shared.replies import CsvReply, JsonReply

logger = get_logger("cli.hhl")

RESULT_HEADER = ["herald_prob", "expected_herald_prob", "fidelity_vs_oracle", "clock_residual", "exact_spectrum"]
EXACT_FIDELITY = 1 - 1e-9
HERALD_TOL = 1e-9
CLOCK_RESIDUAL = 1e-18


@main.command(name="hhl")
@click.option("--problem", type=click.Path(), default=None, help="HHL problem JSON.")
@click.option("--demo", type=click.Choice(sorted(HHL_DEMOS)), default=None, help="Built-in problem.")
@click.option("--m", "precision", type=int, default=None, help="Clock bits, overrides the problem's.")
@click.option("--snap-spectrum", "snap", is_flag=True, default=False, help="Round eigenvalues onto the clock grid.")
@click.option("--sparsity", type=float, default=1.0, show_default=True, help="s of the ledger figure.")
@click.option("--seed", type=int, default=None, help="Recorded in the report; the run is deterministic.")
@click.pass_context
@reports_errors
def cmd_hhl(
    ctx: click.Context,
    problem: Optional[str],
    demo: Optional[str],
    precision: Optional[int],
    snap: bool,
    sparsity: float,
    seed: Optional[int],
):
    """
    Runs the three-stage HHL circuit and checks it against direct inversion.
    """
    if (problem is None) == (demo is None):
        raise InvalidInputError("Pass exactly one of --problem or --demo")
    p = HHL_DEMOS[demo]() if demo is not None else load_problem(problem)
    if precision is not None:
        p = p.with_precision(precision)
    config = run_config(
        ctx, "hhl", seed, problem=problem, demo=demo, options={"m": p.m, "snap_spectrum": snap}
    )
    if snap or config.settings.hhl_snap_spectrum:
        p = snap_spectrum(p)
    result = HhlRunner(settings=config.settings).run(p)

    if result.exact_spectrum:
        require(at_least("Fidelity against A^-1 b", result.fidelity_vs_oracle, EXACT_FIDELITY))
        require(within("Herald probability", result.herald_prob, result.expected_herald_prob, HERALD_TOL))
        require(at_most("Clock residual", result.clock_residual, CLOCK_RESIDUAL))
    if demo is not None and precision is None:
        expectation = EXPECTATIONS[demo]
        require(within("Herald probability", result.herald_prob, expectation.herald_prob, expectation.herald_tol))

    payload = result.to_json()
    payload["problem"] = p.to_json()
    complexity = hhl_gate_complexity(p, sparsity, p.t0)
    payload["gate_complexity"] = {
        "term": complexity.render(),
        "numeric": complexity.evaluate(m=p.m, s=sparsity, t=p.t0, N=p.size),
    }
    row = [
        result.herald_prob,
        result.expected_herald_prob,
        result.fidelity_vs_oracle,
        result.clock_residual,
        result.exact_spectrum,
    ]
    emit(
        config,
        [JsonReply("hhl_result", payload, config=config.to_json()), CsvReply("hhl_result", RESULT_HEADER, [row])],
    )

