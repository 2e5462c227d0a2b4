import logging

import click

from entrench.core._private.cli_logger import (
    add_click_logging_options, handle_entrench_errors)
from entrench.core._private.harness.demos import (
    render_figure1, render_multiple_extensions)

logger = logging.getLogger(__name__)


@click.group()
def demo():
    """
    Commands that run the shipped demo frames.
    """


@demo.command()
@click.option(
    "--theory",
    "theory_file",
    required=False,
    type=click.Path(exists=True, dir_okay=False),
    help="Render another frame in the same layout.")
@add_click_logging_options
@handle_entrench_errors
def figure1(theory_file):
    """The penguin frame: Coh(p) and the extensions at p, b and true."""
    click.echo(render_figure1(theory_file), nl=False)


@demo.command(name="multiple-extensions")
@click.option(
    "--theory",
    "theory_file",
    required=False,
    type=click.Path(exists=True, dir_okay=False),
    help="Render another frame in the same layout.")
@add_click_logging_options
@handle_entrench_errors
def multiple_extensions(theory_file):
    """Two competing statements: sceptical versus credulous inference."""
    click.echo(render_multiple_extensions(theory_file), nl=False)
