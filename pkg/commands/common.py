import functools

import click

from models.report_schema import MethodName
from utils.errors import CycloError


def exit_on_error(fn):
    """Report a CycloError on stderr and exit with its code."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CycloError as exc:
            click.echo(f"error: {exc.detail}", err=True)
            raise click.exceptions.Exit(exc.exit_code)

    return wrapper


def parse_methods(ctx, param, value: str) -> list[MethodName]:
    methods = []
    for token in value.split(","):
        token = token.strip().lower()
        if not token:
            continue
        try:
            method = MethodName(token)
        except ValueError:
            choices = ", ".join(m.value for m in MethodName)
            raise click.BadParameter(f"unknown method {token!r} (choose from {choices})")
        if method not in methods:
            methods.append(method)
    if not methods:
        raise click.BadParameter("at least one method is required")
    return methods


pair_options = [
    click.option("--p", "p", type=int, required=True, help="First odd prime."),
    click.option("--q", "q", type=int, required=True, help="Second odd prime."),
]


def with_pair(fn):
    for option in reversed(pair_options):
        fn = option(fn)
    return fn
