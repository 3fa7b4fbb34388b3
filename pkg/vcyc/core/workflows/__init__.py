# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

from .batch_processing import BatchOptions, BatchProcessor, FormatOptions, process_concurrently
from .workflow import ExitStatus, Workflow, WorkflowUsageError

__all__ = [
    "BatchOptions",
    "BatchProcessor",
    "ExitStatus",
    "FormatOptions",
    "Workflow",
    "WorkflowUsageError",
    "process_concurrently",
]
