# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Dimension table for countable groups of low dimension."""

from typing import NamedTuple

from vcyc.core.dims.citations import Citation
from vcyc.core.dims.report import CaseTag
from vcyc.core.groups.spec import CountableLocal, LocalKind
from vcyc.core.groups.validation import require_valid


class LowDimEntry(NamedTuple):
    hdim_fin: int
    hdim_vcyc: int
    case: CaseTag
    citations: list[Citation]


def low_dim_table(g: CountableLocal) -> LowDimEntry:
    """
    Look up (hdim_fin, hdim_vcyc) from the flags of a countable group.

    A finite group counts as virtually cyclic whatever its flags say.
    """
    require_valid(g)
    virtually_cyclic = g.virtually_cyclic or not g.infinite
    hdim_fin = 1 if g.infinite else 0

    if g.kind is LocalKind.LOCALLY_FINITE:
        if not g.infinite:
            return LowDimEntry(0, 0, CaseTag.LOW_DIM_VC, [Citation.LOW_DIM_LOCALLY_VC])
        return LowDimEntry(1, 1, CaseTag.LOW_DIM_LOCALLY_FINITE, [Citation.LOW_DIM_LOCALLY_VC, Citation.LOCALLY_FINITE])

    if g.kind is LocalKind.LOCALLY_VIRTUALLY_CYCLIC:
        if virtually_cyclic:
            return LowDimEntry(hdim_fin, 0, CaseTag.LOW_DIM_VC, [Citation.LOW_DIM_LOCALLY_VC])
        return LowDimEntry(2, 1, CaseTag.LOW_DIM_LOCALLY_VC, [Citation.LOW_DIM_LOCALLY_VC])

    # hdim_fin ≤ 1 is known; hdim_vcyc then only depends on how cyclic the group is.
    if virtually_cyclic:
        hdim_vcyc = 0
    elif g.locally_virtually_cyclic:
        hdim_vcyc = 1
    else:
        hdim_vcyc = 2
    return LowDimEntry(hdim_fin, hdim_vcyc, CaseTag.LOW_DIM_PROPER_LE_ONE, [Citation.LOW_DIM_PROPER_LE_ONE])
