# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Replay of the non-vanishing argument for groups with Z^2 in a central subgroup.

In the top degree the Mayer-Vietoris sequence ends in

    H^vcd(G) → ∏_C H^vcd(N_G C) → H^{vcd+1}(G \\ E_vcyc G) → 0

where C runs over the commensurability classes of infinite cyclic subgroups
with vcd(N_G C) = vcd(G). The source is cyclic, so once two such classes are
exhibited the first map cannot be onto and the degree vcd + 1 survives.

Witness lattices are written in Hirsch coordinates: the generators of the
poly-Z tower in the order the group record lists them, with the stable letter last
and, for central extensions, the center first.
"""

import logging
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from vcyc.core.dims.engine import compute_report
from vcyc.core.dims.report import CaseTag
from vcyc.core.groups.invariants import is_orientable, vcd_of
from vcyc.core.groups.spec import (
    CentralExtension,
    Crystallographic,
    FreeAbelian,
    GroupSpec,
    HeisenbergByZ,
    Product,
    ZnByZ,
    describe,
)
from vcyc.core.linalg import spectra
from vcyc.core.linalg.abelian import AbelianGroup
from vcyc.core.linalg.fields import LatticeField
from vcyc.core.linalg.lattice import Lattice, fixed_lattice, lattice_of

logger = logging.getLogger(__name__)


class WrongCaseError(ValueError):
    """Raised when a certificate is requested for a group outside its case."""


class MVCertificate(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degree: int = Field(description="vcd(G), the degree of the Mayer-Vietoris map.")
    source_group: AbelianGroup = Field(description="Top cohomology of G, Z or Z/2.")
    target_group: AbelianGroup = Field(description="Product of the top cohomology over the exhibited classes.")
    target_count: int = Field(ge=2, description="Number of exhibited classes with vcd(N_G C) = vcd(G).")
    witnesses: list[LatticeField] = Field(description="Rank-one saturated lattices, one per class.")
    conclusion: str

    @model_validator(mode="after")
    def _distinct_classes(self) -> Self:
        if len(self.witnesses) != self.target_count:
            raise ValueError(f"Expected {self.target_count} witness lattices, got {len(self.witnesses)}")
        if any(w.rank != 1 for w in self.witnesses):
            raise ValueError("Witness lattices must have rank one")
        if len(set(self.witnesses)) != len(self.witnesses):
            raise ValueError("Witness lattices must be pairwise distinct")
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def non_surjective(self) -> bool:
        """A group needing fewer generators than the target cannot map onto it."""
        return self.target_group.min_generators() > self.source_group.min_generators()


def _pad(vectors: list[list[int]], before: int, after: int) -> list[list[int]]:
    return [[0] * before + v + [0] * after for v in vectors]


def _unit(n: int, i: int) -> list[int]:
    return [int(j == i) for j in range(n)]


def central_vectors(g: GroupSpec) -> list[list[int]]:
    """Independent vectors spanning a central free abelian subgroup of a finite-index subgroup."""
    match g:
        case FreeAbelian(n=n) | Crystallographic(n=n):
            return [_unit(n, i) for i in range(n)]
        case ZnByZ(n=n, matrix=a):
            if spectra.matrix_order(a) is not None:
                return [_unit(n + 1, i) for i in range(n + 1)]
            fixed = spectra.max_fixed_rank(a)
            return _pad(fixed_lattice(a, fixed.k_star).vectors(), 0, 1)
        case HeisenbergByZ(n=n, f_bar=f_bar):
            vectors = [_unit(n + 2, n)]
            if spectra.matrix_order(f_bar) is not None:
                vectors.append(_unit(n + 2, n + 1))
            return vectors
        case CentralExtension(m=m, n=n):
            return [_unit(m + n, i) for i in range(m)]
        case Product(left=left, right=right):
            left_rank = vcd_of(left) or 0
            right_rank = vcd_of(right) or 0
            return _pad(central_vectors(left), 0, right_rank) + _pad(central_vectors(right), left_rank, 0)
    return []


def top_class(g: GroupSpec) -> AbelianGroup:
    return AbelianGroup.free(1) if is_orientable(g) else AbelianGroup.cyclic(2)


def mv_case3_certificate(g: GroupSpec) -> MVCertificate:
    report = compute_report(g)
    if report.case is not CaseTag.POLY_Z_MANY or report.vcd is None:
        raise WrongCaseError(f"{describe(g)} is in case {report.case}, not {CaseTag.POLY_Z_MANY}")
    g = report.spec

    vectors = central_vectors(g)[:2]
    if len(vectors) < 2:
        raise WrongCaseError(f"No two independent central directions found for {describe(g)}")
    witnesses: list[Lattice] = [lattice_of(report.vcd, [v]) for v in vectors]

    source = top_class(g)
    target = source
    for _ in witnesses[1:]:
        target = target.direct_sum(source)
    certificate = MVCertificate(
        degree=report.vcd,
        source_group=source,
        target_group=target,
        target_count=len(witnesses),
        witnesses=witnesses,
        conclusion=f"nonvanishing in degree {report.vcd + 1}",
    )
    logger.debug(f"Certificate for {describe(g)}: {source} → {target}, non-surjective={certificate.non_surjective}")
    return certificate
