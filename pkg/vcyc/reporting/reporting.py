# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

import logging
import sys
from pathlib import Path

logger = logging.getLogger(__name__)


class Reporting:
    """
    Writes the rendered document of a workflow run to its destination.

    With an output path the document goes to that file (parent directories
    are created); without one it goes to standard output:
        reporting = Reporting(args.output)
        reporting.write(document.to_json())
    """

    def __init__(self, output: str | None = None) -> None:
        self.output = Path(output) if output else None

    def write(self, content: str) -> Path | None:
        """
        Write the document.

        Args:
            content: The rendered document

        Returns:
            The file written, or None when the document went to standard output
        """
        if self.output is None:
            sys.stdout.write(content)
            sys.stdout.flush()
            return None

        self.output.parent.mkdir(parents=True, exist_ok=True)
        self.output.write_text(content, encoding="utf-8")
        logger.info(f"Wrote report to {self.output}")
        return self.output
