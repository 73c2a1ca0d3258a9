from typing import Optional

import click

from qdesk.cli.base import emit, main, reports_errors, run_config
from qdesk.cli.config import parse_list
from qdesk.ledger.algorithms import hhl_algo_term, lde_algo_term
from qdesk.ledger.report import compose
from qdesk.ledger.table import COLUMNS, ROWS, table_cells, table_reply
from qdesk.ledger.term import C_EPS
from qdesk.shared.errors import InvalidInputError
from qdesk.shared.replies import CsvReply, JsonReply
from qdesk.stateprep.costs import PrepScheme
from qdesk.tomography.schemes import parse_scheme

EVALUATION_HEADER = ["prep", "readout", "N", "overall"]
ALGORITHMS = ("C", "lde", "hhl")


def _prep(value: str) -> PrepScheme:
    for scheme in PrepScheme:
        if value in (scheme.value, scheme.name):
            return scheme
    raise InvalidInputError(f"Unknown preparation scheme: {value}")


@main.command(name="complexity")
@click.option("--table", "show_table", is_flag=True, default=False, help="Write the overall-complexity table.")
@click.option("--prep", default=None, help="Preparation scheme, e.g. DM, BB-qRAM, FF-qRAM.")
@click.option("--readout", default=None, help="Tomography scheme, e.g. SQST, AAPT-MUB, AAPT-POVM.")
@click.option("--algo", type=click.Choice(ALGORITHMS), default="C", show_default=True)
@click.option("--n", "sizes", default=None, help="Comma list of N to evaluate at.")
@click.option("--k", "order", type=int, default=2, show_default=True)
@click.option("--m", "precision", type=int, default=4, show_default=True)
@click.option("--s", "sparsity", type=float, default=1.0, show_default=True)
@click.option("--t", "time", type=float, default=1.0, show_default=True)
@click.option("--rank", type=int, default=1, show_default=True)
@click.option("--c-value", type=float, default=1.0, show_default=True, help="Numeric value of the symbol C.")
@click.option("--seed", type=int, default=None)
@click.pass_context
@reports_errors
def cmd_complexity(
    ctx: click.Context,
    show_table: bool,
    prep: Optional[str],
    readout: Optional[str],
    algo: str,
    sizes: Optional[str],
    order: int,
    precision: int,
    sparsity: float,
    time: float,
    rank: int,
    c_value: float,
    seed: Optional[int],
):
    """
    Composes preparation, processing and readout costs.
    """
    if not show_table and (prep is None or readout is None):
        raise InvalidInputError("Pass --table, or both --prep and --readout")
    Ns = parse_list(sizes, int)
    values = {"k": order, "m": precision, "s": sparsity, "t": time, "R": rank, "C": c_value}
    config = run_config(ctx, "complexity", seed, sweep={"N": Ns} if Ns else {}, options=dict(values, algo=algo))
    base = config.settings.log_base
    algo_term = {"C": C_EPS, "lde": lde_algo_term(order), "hhl": hhl_algo_term(precision, sparsity, time)}[algo]

    replies = []
    payload = {}
    evaluations = []
    if show_table:
        cells = table_cells(algo_term)
        payload["table"] = {f"{row}|{column}": cell for (row, column), cell in sorted(cells.items())}
        replies.append(table_reply(algo=algo_term))
        for _, scheme, _ in ROWS:
            for _, prep_scheme in COLUMNS:
                report = compose(prep_scheme, scheme, algo_term)
                evaluations += [
                    [prep_scheme.value, scheme.value, n, report.evaluate(base=base, N=n, **values)] for n in Ns
                ]
    if prep is not None and readout is not None:
        report = compose(_prep(prep), parse_scheme(readout), algo_term)
        payload["report"] = report.to_json()
        payload["report"]["evaluated"] = [{"N": n, "overall": report.evaluate(base=base, N=n, **values)} for n in Ns]
        evaluations += [
            [report.prep.value, report.readout.value, n, report.evaluate(base=base, N=n, **values)] for n in Ns
        ]
        click.echo(report.overall.render())

    replies.insert(0, JsonReply("complexity", payload, config=config.to_json()))
    if evaluations:
        replies.append(CsvReply("complexity_evaluations", EVALUATION_HEADER, evaluations))
    emit(config, replies)
