# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Brute-force oracles for the spectral decision procedures.

These loop over explicit powers of a matrix and are used by `vcyc verify`
and the test battery to cross-check `matrix_order` and `max_fixed_rank`.
"""

import logging
import math
import os
from functools import lru_cache
from typing import NamedTuple

import sympy

from vcyc.core.linalg.lattice import fixed_lattice
from vcyc.core.linalg.matrix import IntMatrix

logger = logging.getLogger(__name__)

ORACLE_DEPTH_ENV = "VCYC_ORACLE_DEPTH"
ORACLE_DEPTH_CAP = 2520


class BruteForceRank(NamedTuple):
    k: int
    rank: int


@lru_cache(maxsize=32)
def natural_oracle_depth(n: int) -> int:
    """lcm{d : totient(d) <= n}, capped at 2520.

    Every root-of-unity eigenvalue of an n x n integer matrix has an order d
    with totient(d) <= n, so this depth reaches every fixed lattice.
    """
    orders = [d for d in range(1, 2 * max(n, 1) ** 2 + 1) if sympy.totient(d) <= max(n, 1)]
    return min(math.lcm(*orders), ORACLE_DEPTH_CAP)


def default_oracle_depth(n: int) -> int:
    """Oracle depth for n x n matrices, honoring the VCYC_ORACLE_DEPTH override."""
    override = os.getenv(ORACLE_DEPTH_ENV, "")
    if override:
        try:
            depth = int(override)
        except ValueError:
            depth = 0
        if depth >= 1:
            return depth
        logger.warning(f"Ignoring invalid {ORACLE_DEPTH_ENV}={override!r}")
    return natural_oracle_depth(n)


def brute_force_max_fixed_rank(a: IntMatrix, depth: int) -> BruteForceRank:
    """max over k = 1..depth of rank ker(A^k - I), with the first k attaining it."""
    best = BruteForceRank(1, fixed_lattice(a, 1).rank)
    identity = IntMatrix.identity(a.nrows)
    power = a
    for k in range(2, depth + 1):
        power = power @ a
        if best.rank == a.nrows:
            break
        rank = a.nrows - (power - identity).rank()
        if rank > best.rank:
            best = BruteForceRank(k, rank)
    return best


def brute_force_order(a: IntMatrix, depth: int) -> int | None:
    """Smallest k <= depth with A^k = I by direct powering, or None if not found."""
    power = a
    for k in range(1, depth + 1):
        if power.is_identity():
            return k
        power = power @ a
    return None
