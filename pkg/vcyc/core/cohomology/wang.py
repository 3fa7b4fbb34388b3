# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Integral cohomology of Z^n ⋊_A Z from the Wang sequence.

The stable letter acts on H^k(Z^n) = Λ^k Hom(Z^n, Z) by Λ^k(Aᵀ), and each
degree sits in

    0 → coker(Λ^{k-1}(Aᵀ) − 1) → H^k(G) → ker(Λ^k(Aᵀ) − 1) → 0.

The kernel is free, so the sequence splits and H^k is the direct sum.
Degrees where torsion meets a free kernel are still flagged so callers can
tell which groups came out of an extension.
"""

import logging
import math

from pydantic import BaseModel, ConfigDict, Field

from vcyc.core.linalg import spectra
from vcyc.core.linalg.abelian import AbelianGroup, cokernel
from vcyc.core.linalg.lattice import kernel_lattice
from vcyc.core.linalg.matrix import DimensionError, IntMatrix

logger = logging.getLogger(__name__)

# Largest n for which a non-trivial Wang table is computed; Λ^{n/2} has C(n, n/2) rows.
WANG_MAX_RANK = 8


class CohomologyTooLargeError(ValueError):
    """The Wang table of a non-trivial mapping torus is too large to compute exactly."""


class CohomologyTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, description="Rank of the normal free abelian subgroup.")
    groups: list[AbelianGroup] = Field(description="H^k(G) for k = 0 .. n + 1.")
    extension_unresolved: list[int] = Field(
        default_factory=list, description="Degrees where the torsion of the cokernel meets a free kernel."
    )

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * group.free_rank for k, group in enumerate(self.groups))

    @property
    def top(self) -> AbelianGroup:
        return self.groups[self.n + 1]

    def up_to(self, degree: int) -> "CohomologyTable":
        """The same table restricted to degrees 0 .. degree."""
        return CohomologyTable(
            n=self.n,
            groups=self.groups[: degree + 1],
            extension_unresolved=[k for k in self.extension_unresolved if k <= degree],
        )


def _check_shape(n: int, a: IntMatrix, operation: str) -> None:
    if a.shape != (n, n):
        raise DimensionError(f"{operation} expects a {n}x{n} matrix, got {a.nrows}x{a.ncols}")
    spectra.require_unimodular(a, operation)


def wang_cohomology(n: int, a: IntMatrix) -> CohomologyTable:
    """
    H^k(Z^n ⋊_A Z) for k = 0 .. n + 1.

    The torus Z^{n+1} (A = I) is answered for every n. Any other A is limited
    to n <= WANG_MAX_RANK and raises CohomologyTooLargeError beyond it.
    """
    _check_shape(n, a, "wang_cohomology")
    if a.is_identity():
        return CohomologyTable(n=n, groups=[AbelianGroup.free(math.comb(n + 1, k)) for k in range(n + 2)])
    if n > WANG_MAX_RANK:
        raise CohomologyTooLargeError(f"Wang tables are limited to n <= {WANG_MAX_RANK} unless A = I, got n = {n}")
    dual = a.transpose()
    shifted = [spectra.exterior_power(dual, k) - IntMatrix.identity(math.comb(n, k)) for k in range(n + 1)]

    groups = []
    unresolved = []
    for k in range(n + 2):
        coker = cokernel(shifted[k - 1]) if k >= 1 else AbelianGroup.free(0)
        ker_rank = kernel_lattice(shifted[k]).rank if k <= n else 0
        if coker.torsion and ker_rank:
            unresolved.append(k)
        groups.append(coker.direct_sum(AbelianGroup.free(ker_rank)))

    table = CohomologyTable(n=n, groups=groups, extension_unresolved=unresolved)
    logger.debug(f"Wang cohomology for n = {n}: {', '.join(str(h) for h in groups)}")
    return table


def top_cohomology(n: int, a: IntMatrix) -> AbelianGroup:
    """H^{n+1}(Z^n ⋊_A Z) is Z when A preserves orientation and Z/2 otherwise."""
    _check_shape(n, a, "top_cohomology")
    return AbelianGroup.free(1) if a.det() == 1 else AbelianGroup.cyclic(2)
