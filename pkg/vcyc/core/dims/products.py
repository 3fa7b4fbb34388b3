# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Dimensions of direct products of virtually poly-Z groups."""

import logging

from vcyc.core.dims.citations import Citation
from vcyc.core.dims.report import CaseTag, DimReport, Interval, UnsupportedGroupError, Witness, WitnessKind
from vcyc.core.groups.invariants import center_rank, virtually_abelian_rank
from vcyc.core.groups.spec import Product, describe

logger = logging.getLogger(__name__)


def virtually_zn_hdim_vcyc(n: int) -> int:
    return 0 if n <= 1 else n + 1


def product_dims(a: DimReport, b: DimReport) -> DimReport:
    """
    Combine the reports of two factors into the report of their product.

    Exact when the product is virtually abelian, when a finite-index subgroup
    has Z^2 in its center, or when both factors have finite center in every
    finite-index subgroup. Otherwise an interval: the sandwich bounds it below
    and the smaller of the sandwich and the product corollary bounds it above.
    """
    for side, factor in (("left", a), ("right", b)):
        if factor.vcd is None:
            raise UnsupportedGroupError(f"The {side} factor {describe(factor.spec)} is not virtually poly-Z")
        if not isinstance(factor.hdim_vcyc, int):
            raise UnsupportedGroupError(
                f"The {side} factor {describe(factor.spec)} only has bounds {factor.hdim_vcyc} for hdim_vcyc"
            )
    assert a.vcd is not None and b.vcd is not None
    assert isinstance(a.hdim_vcyc, int) and isinstance(b.hdim_vcyc, int)

    spec = Product(left=a.spec, right=b.spec)
    vcd = a.vcd + b.vcd

    rank = virtually_abelian_rank(spec)
    if rank is not None:
        logger.debug(f"{describe(spec)} is virtually Z^{rank}")
        return DimReport(
            spec=spec,
            vcd=vcd,
            hdim_fin=vcd,
            hdim_vcyc=virtually_zn_hdim_vcyc(rank),
            case=CaseTag.PRODUCT_EXACT,
            witnesses=[Witness(kind=WitnessKind.VIRTUALLY_ABELIAN, citation=Citation.VIRTUALLY_ZN, value=rank)],
            citations=[Citation.PRODUCTS, Citation.VIRTUALLY_ZN],
        )

    centers = (center_rank(a.spec) or 0) + (center_rank(b.spec) or 0)
    if centers >= 2 or CaseTag.POLY_Z_MANY in (a.case, b.case):
        logger.debug(f"{describe(spec)} has Z^2 in the center of a finite-index subgroup")
        return DimReport(
            spec=spec,
            vcd=vcd,
            hdim_fin=vcd,
            hdim_vcyc=vcd + 1,
            case=CaseTag.POLY_Z_MANY,
            witnesses=[Witness(kind=WitnessKind.CENTER_RANK, citation=Citation.POLY_Z_CASE_3, value=centers)],
            citations=[Citation.PRODUCTS, Citation.PRODUCTS_SHARP, Citation.POLY_Z_CASE_3],
        )

    if a.case is CaseTag.POLY_Z_EMPTY and b.case is CaseTag.POLY_Z_EMPTY:
        # Finite centers in every finite-index subgroup pass to products.
        logger.debug(f"{describe(spec)} has finite center in every finite-index subgroup")
        return DimReport(
            spec=spec,
            vcd=vcd,
            hdim_fin=vcd,
            hdim_vcyc=vcd,
            case=CaseTag.POLY_Z_EMPTY,
            citations=[Citation.PRODUCTS, Citation.POLY_Z_CASE_1],
        )

    lo = vcd - 1
    hi = min(vcd + 1, a.hdim_vcyc + b.hdim_vcyc + 3)
    logger.debug(f"{describe(spec)} is only bounded: [{lo}, {hi}]")
    return DimReport(
        spec=spec,
        vcd=vcd,
        hdim_fin=vcd,
        hdim_vcyc=Interval(lo=lo, hi=hi),
        case=CaseTag.PRODUCT_BOUNDS,
        citations=[Citation.PRODUCTS, Citation.SANDWICH],
    )
