# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Spectral data of integer matrices: characteristic polynomials, finite order,
maximal fixed lattices and exterior powers.
"""

import itertools
import logging
import math
from typing import NamedTuple

import sympy

from vcyc.core.linalg.lattice import fixed_lattice
from vcyc.core.linalg.matrix import DimensionError, IntMatrix, NotUnimodularError
from vcyc.core.linalg.poly import IntPoly, cyclotomic_factorization

logger = logging.getLogger(__name__)


class FixedRank(NamedTuple):
    k_star: int
    rank: int


def char_poly(a: IntMatrix) -> IntPoly:
    """det(x·I - A) by Faddeev-LeVerrier with exact integer division."""
    a.require_square("char_poly")
    n = a.nrows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    identity = IntMatrix.identity(n)
    m = IntMatrix.zeros(n, n)
    for k in range(1, n + 1):
        m = a @ m + identity.scale(coeffs[n - k + 1])
        trace = (a @ m).trace()
        # Newton's identities guarantee divisibility by k.
        coeffs[n - k] = -trace // k
    return IntPoly(tuple(coeffs))


def require_unimodular(a: IntMatrix, operation: str) -> int:
    a.require_square(operation)
    det = a.det()
    if abs(det) != 1:
        raise NotUnimodularError(f"{operation} requires |det A| = 1, got det = {det}")
    return det


def _cyclotomic_lcm(a: IntMatrix) -> tuple[int, bool]:
    factorization = cyclotomic_factorization(char_poly(a))
    return math.lcm(1, *factorization.orders), factorization.is_product_of_cyclotomics


def matrix_order(a: IntMatrix) -> int | None:
    """Smallest k >= 1 with A^k = I, or None when A has infinite order."""
    require_unimodular(a, "matrix_order")
    k_star, all_roots_of_unity = _cyclotomic_lcm(a)
    if not all_roots_of_unity:
        return None
    if not a.power(k_star).is_identity():
        # Roots of unity but not semisimple.
        return None
    for k in sorted(int(d) for d in sympy.divisors(k_star)):
        if a.power(k).is_identity():
            return k
    return k_star


def max_fixed_rank(a: IntMatrix) -> FixedRank:
    """The largest rank of ker(A^k - I) over all k >= 1, with the k realizing it.

    Every root-of-unity eigenvalue has order dividing k_star and the fixed
    lattices grow along divisibility, so L_{k_star} has the maximal rank.
    """
    require_unimodular(a, "max_fixed_rank")
    k_star, _ = _cyclotomic_lcm(a)
    rank = fixed_lattice(a, k_star).rank
    logger.debug(f"max_fixed_rank: k_star={k_star}, rank={rank}")
    return FixedRank(k_star, rank)


def exterior_power(a: IntMatrix, k: int) -> IntMatrix:
    """The matrix of Λ^k A in the lexicographic basis of k-subsets."""
    a.require_square("exterior_power")
    n = a.nrows
    if not 0 <= k <= n:
        raise DimensionError(f"exterior_power needs 0 <= k <= {n}, got {k}")
    subsets = list(itertools.combinations(range(n), k))
    return IntMatrix.from_rows(
        [[a.submatrix(rows, cols).det() for cols in subsets] for rows in subsets],
        ncols=len(subsets),
    )
