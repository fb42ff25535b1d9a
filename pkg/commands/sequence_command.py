import click

from commands.common import exit_on_error, with_pair
from lincomp.sequence import balance, generate
from ntheory.cyclotomy import build_context


@click.command("sequence")
@with_pair
@click.option("--g", "g", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["ascii", "binary"]), default="ascii", show_default=True)
@click.option("--width", type=int, default=64, show_default=True, help="Bits per ASCII line; 0 for one line.")
@click.option("--balance", "show_balance", is_flag=True, help="Print the counts of ones and zeros instead.")
@exit_on_error
def sequence_command(p, q, g, fmt, width, show_balance):
    """Dump one period of the DH-GCS."""
    seq = generate(build_context(p, q, g))
    if show_balance:
        ones, zeros = balance(seq)
        click.echo(f"ones={ones} zeros={zeros}")
        return

    if fmt == "binary":
        click.get_binary_stream("stdout").write(seq.to_bytes())
        return
    text = seq.to_ascii()
    step = width if width > 0 else len(text)
    for start in range(0, len(text), step):
        click.echo(text[start : start + step])
