import functools
from typing import List, Optional

import click

from qdesk.cli.config import FORMATS, RunConfig
from qdesk.shared.errors import QdeskError, ToleranceError
from qdesk.shared.log import configure, get_logger
from qdesk.shared.replies import Reply
from qdesk.shared.settings import Settings
from qdesk.shared.utils import Result

logger = get_logger("cli")


@click.group()
@click.option("--settings", "settings_path", type=click.Path(), default=None, help="YAML or TOML settings file.")
@click.option("--out", "out_dir", type=click.Path(), default="out", show_default=True, help="Report directory.")
@click.option(
    "--format",
    "formats",
    type=click.Choice(FORMATS),
    multiple=True,
    help="Report formats to write, all by default.",
)
@click.option("--verbose", is_flag=True, default=False, help="Debug logging.")
@click.pass_context
def main(ctx: click.Context, settings_path: Optional[str], out_dir: str, formats, verbose: bool):
    """
    Desk-scale verification and resource accounting for gate-based quantum algorithms.
    """
    configure(verbose=verbose)
    ctx.ensure_object(dict)
    ctx.obj["settings_path"] = settings_path
    ctx.obj["out_dir"] = out_dir
    ctx.obj["formats"] = tuple(formats) or FORMATS


def reports_errors(command):
    """
    Maps QdeskError subclasses onto the process exit status.
    """

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except QdeskError as e:
            logger.error(f"{ctx.info_name} failed | {type(e).__name__}: {e}")
            click.echo(f"Error: {e}", err=True)
            ctx.exit(e.exit_code)

    return wrapper


def run_config(ctx: click.Context, subcommand: str, seed: Optional[int], **fields) -> RunConfig:
    path = ctx.obj.get("settings_path")
    settings = Settings.from_file(path) if path else Settings()
    return RunConfig(
        subcommand=subcommand,
        out_dir=ctx.obj["out_dir"],
        seed=settings.default_seed if seed is None else seed,
        settings=settings,
        formats=ctx.obj["formats"],
        **fields,
    )


def require(check: Result) -> None:
    if not check.success:
        raise ToleranceError(check.error)


def within(name: str, value: float, expected: float, tol: float) -> Result[float]:
    if abs(value - expected) <= tol:
        return Result(success=True, value=value, error=None)
    return Result(success=False, value=value, error=f"{name} {value} differs from {expected} by more than {tol}.")


def at_least(name: str, value: float, minimum: float) -> Result[float]:
    if value >= minimum:
        return Result(success=True, value=value, error=None)
    return Result(success=False, value=value, error=f"{name} {value} is below {minimum}.")


def at_most(name: str, value: float, maximum: float) -> Result[float]:
    if value <= maximum:
        return Result(success=True, value=value, error=None)
    return Result(success=False, value=value, error=f"{name} {value} exceeds {maximum}.")


def emit(config: RunConfig, replies: List[Reply]) -> List[str]:
    """
    Renders every reply first, then writes them one by one, so a rendering failure leaves no files behind.
    """
    chosen = [r for r in replies if config.wants(r.EXTENSION.lstrip(".")) or r.EXTENSION == ".txt"]
    for reply in chosen:
        reply.build()
    paths = [reply.send(config.out_dir) for reply in chosen]
    for path in paths:
        click.echo(path)
    return paths
