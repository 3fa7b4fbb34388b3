# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Main Typer application for the vcyc CLI."""

import logging
import os
import sys
from dataclasses import dataclass
from typing import Annotated

import click
import typer

from vcyc import __version__
from vcyc.cli.commands.run import LazyWorkflowGroup
from vcyc.core.workflows import ExitStatus
from vcyc.observability.logging import setup_logging

logger = logging.getLogger(__name__)

# The workflows are the top-level commands: `vcyc compute`, `vcyc verify`, ...
app = typer.Typer(
    cls=LazyWorkflowGroup,
    help="Dimensions of classifying spaces for proper and virtually cyclic actions",
    no_args_is_help=True,
)


# Global state to pass between callbacks and commands
@dataclass
class GlobalState:
    """Global state container for CLI execution."""

    debug: bool = False
    show_logs: bool = False
    log_output: str | None = None


state = GlobalState()


def version_callback(value: bool) -> None:
    """Callback for --version flag."""
    if value:
        typer.echo(f"vcyc {__version__}")
        raise typer.Exit()


@app.callback()
def callback(
    version: Annotated[
        bool | None,
        typer.Option("--version", "-v", callback=version_callback, is_eager=True, help="Show version and exit"),
    ] = None,
    debug: Annotated[bool, typer.Option("--debug", help="Enable debug logging")] = False,
    show_logs: Annotated[bool, typer.Option("--show-logs", help="Print logs on stderr")] = False,
    log_output: Annotated[
        str | None, typer.Option("--log-output", help="Directory to write vcyc.log to, no log file if not provided")
    ] = None,
) -> None:
    """Main CLI entry point with global options."""
    state.debug = debug
    state.show_logs = show_logs
    state.log_output = log_output

    log_path = os.path.join(log_output, "vcyc.log") if log_output else None
    log_level = logging.DEBUG if debug else logging.INFO
    setup_logging(level=log_level, path=log_path, show_logs=show_logs)


def cli(args: list[str] | None = None) -> int:
    """Run the CLI on `args` (sys.argv when None) and return the exit code.

    Usage errors of any kind exit with 1; the workflows choose every other code.
    """
    try:
        result = app(args=args, prog_name="vcyc", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return ExitStatus.USAGE
    except click.exceptions.Abort:
        return ExitStatus.USAGE
    except Exception as e:
        logger.exception(f"Unexpected error: {e!s}")
        typer.echo(f"Error: {e!s}", err=True)
        return ExitStatus.USAGE
    return result if isinstance(result, int) else ExitStatus.OK


def main() -> None:
    """Console script entry point."""
    sys.exit(cli())


if __name__ == "__main__":
    main()
