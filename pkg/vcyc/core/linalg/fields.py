# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Pydantic field types for matrices and lattices.

Matrices travel as arrays of rows. Integers may be JSON numbers or decimal
strings on input; on output anything outside the signed 64-bit range is
written as a decimal string so no JSON reader truncates it.
"""

import re
from typing import Annotated, Any

from pydantic import BeforeValidator, PlainSerializer

from vcyc.core.linalg.lattice import Lattice
from vcyc.core.linalg.matrix import IntMatrix

_DECIMAL = re.compile(r"^[+-]?\d+$")
_INT64_MAX = 2**63 - 1


def parse_integer(value: Any) -> int:
    if isinstance(value, bool):
        raise ValueError(f"Expected an integer, got boolean {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _DECIMAL.match(value.strip()):
        return int(value.strip())
    raise ValueError(f"Expected an integer or a decimal string, got {value!r}")


def dump_integer(value: int) -> int | str:
    return value if -_INT64_MAX - 1 <= value <= _INT64_MAX else str(value)


def parse_matrix(value: Any) -> IntMatrix:
    if isinstance(value, IntMatrix):
        return value
    if not isinstance(value, list | tuple):
        raise ValueError(f"Expected a matrix given as a list of rows, got {type(value).__name__}")
    rows = []
    for row in value:
        if not isinstance(row, list | tuple):
            raise ValueError(f"Matrix rows must be lists, got {type(row).__name__}")
        rows.append([parse_integer(x) for x in row])
    return IntMatrix.from_rows(rows)


def dump_matrix(value: IntMatrix) -> list[list[int | str]]:
    return [[dump_integer(x) for x in row] for row in value.rows()]


def parse_lattice(value: Any) -> Lattice:
    if isinstance(value, Lattice):
        return value
    if not isinstance(value, dict) or "ambient_rank" not in value or "basis" not in value:
        raise ValueError("A lattice is an object with 'ambient_rank' and 'basis'")
    ambient_rank = parse_integer(value["ambient_rank"])
    columns = [[parse_integer(x) for x in col] for col in value["basis"]]
    return Lattice(ambient_rank, IntMatrix.from_columns(columns, nrows=ambient_rank))


def dump_lattice(value: Lattice) -> dict[str, Any]:
    """Lattices are written as their list of basis vectors."""
    return {
        "ambient_rank": value.ambient_rank,
        "basis": [[dump_integer(x) for x in col] for col in value.vectors()],
    }


MatrixField = Annotated[
    IntMatrix,
    BeforeValidator(parse_matrix),
    PlainSerializer(dump_matrix, return_type=list[list[int | str]]),
]

LatticeField = Annotated[
    Lattice,
    BeforeValidator(parse_lattice),
    PlainSerializer(dump_lattice, return_type=dict[str, Any]),
]
