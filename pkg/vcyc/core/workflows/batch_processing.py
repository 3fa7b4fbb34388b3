# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Utilities for workflows that evaluate every entry of a spec document.
"""

import asyncio
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Annotated, Generic, TypeVar

from vcyc.core.cohomology.wang import CohomologyTooLargeError
from vcyc.core.dims.report import UnsupportedGroupError
from vcyc.core.groups.validation import InvalidSpecError
from vcyc.core.linalg.matrix import LinalgError
from vcyc.core.workflows.workflow import WorkflowUsageError
from vcyc.inputs.spec_document import Diagnostic, NamedSpec, SpecDocument, SpecDocumentError, read_spec

DOCUMENT_NAME = "<document>"

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class BatchOptions:
    """Base input for workflows that read a spec document."""

    input: Annotated[str, {"help": "Spec document to read, '-' for standard input"}] = "-"
    output: Annotated[str | None, {"help": "File to write the report to, standard output if not provided"}] = None
    max_concurrent: Annotated[int, {"help": "Maximum number of entries to evaluate concurrently"}] = 4

    def __post_init__(self) -> None:
        """Validate batch options after initialization."""
        if hasattr(super(), "__post_init__"):
            super().__post_init__()  # type: ignore

        if self.max_concurrent < 1:
            raise ValueError("--max-concurrent must be at least 1")


@dataclass
class FormatOptions:
    """Output format selection for workflows that write a report document."""

    format: Annotated[str, {"help": "Report format", "choices": ["json", "md"]}] = "json"

    def __post_init__(self) -> None:
        if hasattr(super(), "__post_init__"):
            super().__post_init__()  # type: ignore

        if self.format not in ("json", "md"):
            raise ValueError(f"Unknown format {self.format!r}, expected 'json' or 'md'")


def diagnose(name: str, error: Exception) -> list[Diagnostic]:
    """Turn an exception raised while evaluating one entry into diagnostics for that entry."""
    match error:
        case InvalidSpecError(report=report):
            return [Diagnostic(name=name, rule=v.rule, message=v.message) for v in report.violations]
        case UnsupportedGroupError():
            return [Diagnostic(name=name, rule="dims.unsupported", message=str(error))]
        case CohomologyTooLargeError():
            return [Diagnostic(name=name, rule="cohomology.too_large", message=str(error))]
        case LinalgError():
            return [Diagnostic(name=name, rule="linalg.error", message=str(error))]
    return [Diagnostic(name=name, rule="engine.error", message=f"{type(error).__name__}: {error}")]


async def process_concurrently(
    items: Sequence[T], processor: Callable[[T], R], max_concurrent: int = 4
) -> list[R | Exception]:
    """
    Run a blocking processor over every item on worker threads.

    Args:
        items: The items to process
        processor: Function evaluating a single item
        max_concurrent: Maximum number of items in flight

    Returns:
        One outcome per item, in input order: the processor's result, or the
        exception it raised. An exception never cancels the other items.
    """
    semaphore = asyncio.Semaphore(max_concurrent)

    async def process_with_semaphore(item: T) -> R | Exception:
        async with semaphore:
            try:
                return await asyncio.to_thread(processor, item)
            except Exception as e:
                return e

    return list(await asyncio.gather(*(process_with_semaphore(item) for item in items)))


class BatchProcessor(Generic[T]):
    """
    Mixin class providing utilities for workflows over a spec document.

    This class provides reusable utilities for:
    - Loading the spec document named by the options
    - Evaluating every entry concurrently with a per-entry fallback to diagnostics

    Workflows keep full control over their run() method and how results are assembled.
    """

    def load_document(self, args: BatchOptions) -> SpecDocument:
        """
        Read the spec document named by the options.

        An unreadable file is a usage error. A file that is not a spec document
        yields an empty document whose only diagnostic describes the problem.
        """
        try:
            return read_spec(args.input)
        except OSError as e:
            raise WorkflowUsageError(f"Cannot read {args.input}: {e.strerror or e}") from e
        except SpecDocumentError as e:
            logger.error(str(e))
            return SpecDocument(diagnostics=[Diagnostic(name=DOCUMENT_NAME, rule="document.malformed", message=str(e))])

    async def process_entries_concurrently(
        self,
        entries: Sequence[NamedSpec],
        entry_processor: Callable[[NamedSpec], T],
        max_concurrent: int = 4,
    ) -> tuple[list[T], list[Diagnostic]]:
        """
        Evaluate every entry, collecting results and the diagnostics of failed entries.

        Args:
            entries: Validated entries of the document
            entry_processor: Blocking function that evaluates a single entry
            max_concurrent: Maximum concurrent evaluations

        Returns:
            The results of the entries that succeeded, in document order, and one
            or more diagnostics for each entry that raised
        """
        outcomes = await process_concurrently(entries, entry_processor, max_concurrent)

        results: list[T] = []
        diagnostics: list[Diagnostic] = []
        for entry, outcome in zip(entries, outcomes, strict=True):
            if isinstance(outcome, Exception):
                logger.warning(f"Skipping {entry.name}: {outcome}")
                diagnostics.extend(diagnose(entry.name, outcome))
            else:
                results.append(outcome)
        return results, diagnostics
