#!/usr/bin/env python3
# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Release check: the versions in pyproject.toml and vcyc/__init__.py must agree.
Report documents carry the latter as `tool_version`.
"""

import re
import sys
from pathlib import Path

project_root = Path(__file__).parent.parent

_PATTERNS = {
    "pyproject.toml": r'^version\s*=\s*["\']([^"\']+)["\']',
    "vcyc/__init__.py": r'^__version__\s*=\s*["\']([^"\']+)["\']',
}


def read_version(relative_path: str) -> str:
    path = project_root / relative_path
    if not path.exists():
        raise FileNotFoundError(f"{relative_path} not found at {path}")

    match = re.search(_PATTERNS[relative_path], path.read_text(), re.MULTILINE)
    if not match:
        raise ValueError(f"Could not find a version in {relative_path}")
    return match.group(1)


def main() -> int:
    try:
        versions = {path: read_version(path) for path in _PATTERNS}
    except (OSError, ValueError) as e:
        print(f"❌ Error during version check: {e}")
        return 1

    for path, version in versions.items():
        print(f"{path:<18} {version}")

    if len(set(versions.values())) == 1:
        print("✅ Version consistency check PASSED")
        return 0
    print("❌ Version consistency check FAILED")
    return 1


if __name__ == "__main__":
    sys.exit(main())
