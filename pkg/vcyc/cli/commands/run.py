# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Workflow commands with lazy discovery.

This implementation uses a custom Click Group that discovers workflows lazily
when list_commands() or get_command() is called. This ensures workflows are
discovered at the right time, even when --help is used.
"""

import asyncio
import logging
from typing import Any

import click
import typer
from typer.core import TyperCommand, TyperGroup

from vcyc.cli.adapters import TyperOptionsAdapter
from vcyc.core.workflows import ExitStatus, Workflow, WorkflowUsageError
from vcyc.core.workflows.discovery import discover_workflows

logger = logging.getLogger(__name__)

# Adapter for converting workflow Options to CLI parameters
adapter = TyperOptionsAdapter()


class LazyWorkflowGroup(TyperGroup):
    """Custom Typer Group whose commands are the discovered workflows."""

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self._workflows: dict[str, type[Workflow]] | None = None

    def _discover_workflows(self) -> dict[str, type[Workflow]]:
        """Discover workflows if not already discovered."""
        if self._workflows is None:
            self._workflows = discover_workflows()
            logger.debug(f"Discovered {len(self._workflows)} workflows: {sorted(self._workflows)}")
        return self._workflows

    def list_commands(self, ctx: click.Context) -> list[str]:
        """List available workflow commands."""
        return sorted(self._discover_workflows())

    def get_command(self, ctx: click.Context, cmd_name: str) -> click.Command | None:
        """Get a specific workflow command by name."""
        workflows = self._discover_workflows()
        if cmd_name not in workflows:
            return None
        return _create_workflow_command(cmd_name, workflows[cmd_name])


def run_workflow(workflow: Workflow) -> None:
    """Run a workflow to completion and exit with the status it reports."""
    logger.info(f"Running workflow: {workflow.name}")
    try:
        result = asyncio.run(workflow.run())
    except WorkflowUsageError as e:
        raise click.UsageError(str(e)) from e
    except KeyboardInterrupt:
        logger.info("Workflow cancelled")
        raise typer.Exit(code=ExitStatus.USAGE) from None
    except Exception as e:
        logger.error(f"Workflow error: {e!s}")
        raise

    status = workflow.exit_status(result)
    logger.info(f"Workflow {workflow.name} finished with status {status.name}")
    if status is not ExitStatus.OK:
        raise typer.Exit(code=int(status))


def _create_workflow_command(workflow_name: str, workflow_class: type[Workflow]) -> TyperCommand:
    """Create a Typer Command for a workflow.

    Args:
        workflow_name: Name of the workflow
        workflow_class: Workflow class with options() method

    Returns:
        TyperCommand configured with the workflow's options
    """
    options_class = workflow_class.options()
    help_text = workflow_class.__doc__ or f"Run the {workflow_name} workflow"

    if options_class is None:

        def simple_command() -> None:
            """Execute workflow with no options."""
            run_workflow(workflow_class(args=None))

        return TyperCommand(name=workflow_name, callback=simple_command, help=help_text)

    def workflow_command(**kwargs: Any) -> None:
        """Execute the workflow."""
        try:
            options = adapter.extract_options(options_class, **kwargs)
        except ValueError as e:
            # Validation error from options dataclass __post_init__
            raise click.UsageError(f"Invalid options: {e}") from e

        run_workflow(workflow_class(args=options))

    return TyperCommand(
        name=workflow_name,
        callback=workflow_command,
        params=adapter.options_to_click_params(options_class),
        help=help_text,
    )
