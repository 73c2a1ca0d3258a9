from typing import Optional

import click

from qdesk.cli.base import emit, main, reports_errors, require, run_config
from qdesk.cli.config import parse_list
from qdesk.ledger.crosscheck import crosscheck_measured
from qdesk.ledger.term import N_LOG2_N
from qdesk.shared.log import get_logger
from qdesk.shared.replies import CsvReply, JsonReply
from qdesk.shared.utils import Result
from qdesk.stateprep import measured_prep_count, random_target

logger = get_logger("cli.prepbench")

BENCH_HEADER = ["N", "measured", "analytic", "ratio"]


@main.command(name="prep-bench")
@click.option("--sizes", default="8,16,32,64", show_default=True, help="Comma list of N.")
@click.option("--real", is_flag=True, default=False, help="Real nonnegative targets, no phase stage.")
@click.option("--seed", type=int, default=None)
@click.pass_context
@reports_errors
def cmd_prep_bench(ctx: click.Context, sizes: str, real: bool, seed: Optional[int]):
    """
    Measured direct-manipulation preparation counts against N log^2(N).
    """
    Ns = parse_list(sizes, int)
    config = run_config(ctx, "prep-bench", seed, sweep={"N": Ns}, options={"real": real})
    samples = []
    for size in Ns:
        samples.append(({"N": size}, measured_prep_count(random_target(size, config.seed, real=real))))
    table = crosscheck_measured(N_LOG2_N, samples)
    rows = [[r.params["N"], r.measured, r.analytic, r.ratio] for r in table.rows]
    emit(
        config,
        [
            JsonReply("prep_bench", table.to_json(), config=config.to_json()),
            CsvReply("prep_bench", BENCH_HEADER, rows),
        ],
    )
    drift_ok = Result(success=not table.alarm, value=table.drift, error=f"Ratio drifted by {table.drift}x.")
    require(drift_ok)
