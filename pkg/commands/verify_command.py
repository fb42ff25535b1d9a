import logging
import random

import click

from commands.common import exit_on_error, parse_methods
from commands.table_command import order8_pairs
from lincomp.methods import cross_check_pair
from ntheory.residue_arith import scan_common_primitive_root
from utils.formatting import describe_report
from utils.parallel import run_ordered
from utils.settings import CYCLO_SMATRIX_MAX_DEGREE, CYCLO_THREADS

logger = logging.getLogger("VerifyCommand")


@click.command("verify")
@click.option("--max", "bound", type=int, required=True, help="Largest prime considered.")
@click.option(
    "--methods",
    default="closed,gcd,bm",
    show_default=True,
    callback=parse_methods,
    help="Comma-separated subset of gcd,bm,smatrix,closed.",
)
@click.option("--seed", type=int, default=None, help="Pick g from a random starting point.")
@click.option("--smatrix-max-degree", type=int, default=CYCLO_SMATRIX_MAX_DEGREE, show_default=True)
@click.option("--threads", type=int, default=CYCLO_THREADS, show_default=True)
@click.option("--progress/--no-progress", default=False)
@exit_on_error
def verify_command(bound, methods, seed, smatrix_max_degree, threads, progress):
    """Cross-check every requested method on all order-8 pairs up to --max."""
    pairs = order8_pairs(bound)
    if not pairs:
        click.echo("no pairs")
        return

    rng = random.Random(seed) if seed is not None else None
    tasks = []
    for p, q in pairs:
        g = scan_common_primitive_root(p, q, rng.randint(0, p * q)) if rng else None
        tasks.append((p, q, methods, g, smatrix_max_degree))

    reports = run_ordered(cross_check_pair, tasks, workers=threads, progress=progress, desc="verify")
    failed = 0
    for report in reports:
        click.echo(describe_report(report))
        if not report.passed:
            failed += 1
            logger.warning(f"pair ({report.p}, {report.q}) failed: {report.detail}")

    click.echo(f"{len(reports)} pairs: {len(reports) - failed} passed, {failed} failed")
    if failed:
        raise click.exceptions.Exit(1)
