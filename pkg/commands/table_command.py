import logging
from math import gcd

import click

from commands.common import exit_on_error
from lincomp.closed_form import lc_closed_form
from models.report_schema import OutputFormat, TableRow
from ntheory.residue_arith import primes_up_to
from utils.formatting import render_table
from utils.parallel import run_ordered
from utils.settings import CYCLO_THREADS

logger = logging.getLogger("TableCommand")


def order8_pairs(bound: int) -> list[tuple[int, int]]:
    """Prime pairs p < q <= bound with gcd(p-1, q-1) = 8, in (p, q) order."""
    primes = [r for r in primes_up_to(bound) if r % 8 == 1]
    return [(p, q) for i, p in enumerate(primes) for q in primes[i + 1 :] if gcd(p - 1, q - 1) == 8]


def table_row(p: int, q: int) -> TableRow:
    return TableRow(p=p, q=q, l_pq=lc_closed_form(p, q), l_qp=lc_closed_form(q, p))


@click.command("table")
@click.option("--max", "bound", type=int, required=True, help="Largest prime considered.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.CSV.value,
    show_default=True,
)
@click.option("--threads", type=int, default=CYCLO_THREADS, show_default=True)
@click.option("--progress/--no-progress", default=False)
@exit_on_error
def table_command(bound, fmt, threads, progress):
    """Closed-form L(p,q) and L(q,p) for every order-8 pair up to --max."""
    pairs = order8_pairs(bound)
    logger.info(f"{len(pairs)} pairs up to {bound}")
    rows = run_ordered(table_row, pairs, workers=threads, progress=progress, desc="table")
    click.echo(render_table(rows, OutputFormat(fmt)))
