import click

# Commands
from commands.classify_command import classify_command
from commands.lc_command import lc_command
from commands.sequence_command import sequence_command
from commands.smatrix_command import smatrix_command
from commands.table_command import table_command
from commands.verify_command import verify_command
from utils.logging import configure_logging, logger
from utils.settings import CYCLO_LOG_LEVEL


@click.group()
@click.option("--log-level", default=CYCLO_LOG_LEVEL, show_default=True, help="Logging level (logs go to stderr).")
@click.version_option("1.0.0", prog_name="cyclo-lc")
def cli(log_level):
    """Order-eight generalized cyclotomic sequences of length pq and their linear complexity."""
    configure_logging(log_level)
    logger.debug(f"log level {log_level}")


cli.add_command(lc_command)
cli.add_command(verify_command)
cli.add_command(table_command)
cli.add_command(classify_command)
cli.add_command(sequence_command)
cli.add_command(smatrix_command)


if __name__ == "__main__":
    cli()
