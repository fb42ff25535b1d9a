import click

from commands.common import exit_on_error, with_pair
from lincomp.closed_form import classify, lc_closed_form
from utils.formatting import describe_classification


@click.command("classify")
@with_pair
@exit_on_error
def classify_command(p, q):
    """Residue-class triple, case and deficit decomposition of (p, q)."""
    for line in describe_classification(classify(p, q)):
        click.echo(line)
    click.echo(f"L(p,q)={lc_closed_form(p, q)}")
