import click

from commands.common import exit_on_error, with_pair
from lincomp.methods import smatrix_for
from lincomp.smatrix import lc_from_smatrix
from ntheory.cyclotomy import build_context
from utils.settings import CYCLO_SMATRIX_MAX_DEGREE


@click.command("smatrix")
@with_pair
@click.option("--g", "g", type=int, default=None)
@click.option("--smatrix-max-degree", type=int, default=CYCLO_SMATRIX_MAX_DEGREE, show_default=True)
@exit_on_error
def smatrix_command(p, q, g, smatrix_max_degree):
    """Print the matrix of values S(α^k) in hexadecimal."""
    sm = smatrix_for(build_context(p, q, g), smatrix_max_degree)
    click.echo(f"GF(2^{sm.spec.m}) modulus {sm.spec.modulus.to_hex()} alpha {sm.alpha.to_hex()}")
    for line in sm.render():
        click.echo(line)
    block, column, row, corner = sm.zero_counts()
    click.echo(f"zeros: block={block} column={column} row={row} corner={int(corner)}")
    click.echo(f"L={lc_from_smatrix(sm)}")
