# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Base class for workflows"""

from abc import ABC, abstractmethod
from enum import IntEnum
from typing import ClassVar, Generic, TypeVar, cast, get_args, get_origin

Options = TypeVar("Options")
Result = TypeVar("Result")


class ExitStatus(IntEnum):
    """Process exit codes shared by every command."""

    OK = 0
    USAGE = 1
    INVALID = 2
    DISCREPANCY = 3


class WorkflowUsageError(ValueError):
    """Raised by a workflow when its arguments cannot be acted on (unreadable input, unknown names)."""


class Workflow(ABC, Generic[Options, Result]):
    name: ClassVar[str]

    def __init__(self, args: Options) -> None:
        super().__init__()  # type: ignore

        self.args = args

    @abstractmethod
    async def run(self) -> Result:
        pass

    def exit_status(self, result: Result) -> ExitStatus:
        """Exit code for a finished run. Workflows that can fail softly override this."""
        return ExitStatus.OK

    @classmethod
    def options(cls) -> type[Options] | None:
        c: type | None = cls
        while c is not object:
            for base in getattr(c, "__orig_bases__", ()):
                if get_origin(base) is Workflow:
                    opt = get_args(base)[0]
                    unwrapped = get_origin(opt) or opt  # handle Annotated[T, ...] etc.
                    if isinstance(unwrapped, type):
                        return cast("type[Options]", unwrapped)
                    return None
            if c is not None:
                c = c.__base__
        return None
