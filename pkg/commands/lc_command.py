import click

from commands.common import exit_on_error, with_pair
from lincomp.closed_form import classify
from lincomp.complexity import feedback_polynomial, minimal_polynomial
from lincomp.methods import linear_complexity
from lincomp.sequence import generate
from models.report_schema import MethodName
from ntheory.cyclotomy import build_context
from utils.formatting import describe_classification
from utils.settings import CYCLO_SMATRIX_MAX_DEGREE


@click.command("lc")
@with_pair
@click.option("--g", "g", type=int, default=None, help="Common primitive root (default: smallest).")
@click.option(
    "--method",
    type=click.Choice([m.value for m in MethodName]),
    default=MethodName.GCD.value,
    show_default=True,
)
@click.option("--smatrix-max-degree", type=int, default=CYCLO_SMATRIX_MAX_DEGREE, show_default=True)
@click.option("--verbose", is_flag=True, help="Also print the classification and minimal polynomial degree.")
@click.option("--hex", "as_hex", is_flag=True, help="Print the minimal polynomial, lowest coefficient first.")
@click.option("--feedback", is_flag=True, help="Print the LFSR characteristic polynomial from Berlekamp-Massey, in hex.")
@exit_on_error
def lc_command(p, q, g, method, smatrix_max_degree, verbose, as_hex, feedback):
    """Linear complexity of the DH-GCS of length pq."""
    ctx = build_context(p, q, g)
    click.echo(linear_complexity(ctx, MethodName(method), smatrix_max_degree))

    if verbose or as_hex:
        m = minimal_polynomial(generate(ctx))
        if verbose:
            click.echo(f"g={ctx.g} d={ctx.d} e={ctx.e}")
            if ctx.d == 8:
                for line in describe_classification(classify(p, q)):
                    click.echo(line)
            click.echo(f"deg m(x)={m.degree}")
        if as_hex:
            click.echo(m.to_hex())

    if feedback:
        click.echo(feedback_polynomial(generate(ctx)).to_hex())
