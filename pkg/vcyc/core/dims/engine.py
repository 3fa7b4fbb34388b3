# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Dispatch from a group spec to hdim_fin, hdim_vcyc and the case that decides them.

Every virtually poly-Z variant is routed to one of the four cases of the
virtually poly-Z theorem (or to the virtually Z^n example for n ≤ 1). The
matrix invariants are read through the `spectra` module so that a single
patch point controls them.
"""

import logging
from typing import NamedTuple

import sympy

from vcyc.core.dims.citations import Citation
from vcyc.core.dims.low_dim import low_dim_table
from vcyc.core.dims.products import product_dims, virtually_zn_hdim_vcyc
from vcyc.core.dims.report import CaseTag, DimReport, Interval, UnsupportedGroupError, Witness, WitnessKind
from vcyc.core.groups.invariants import center_rank, vcd_of, virtually_abelian_rank
from vcyc.core.groups.spec import (
    CentralExtension,
    CountableLocal,
    Crystallographic,
    FreeAbelian,
    GroupSpec,
    HeisenbergByZ,
    Product,
    ZnByZ,
    ZOneOverP,
    describe,
    is_virtually_poly_z,
)
from vcyc.core.groups.validation import normalize_spec, require_valid
from vcyc.core.linalg import spectra
from vcyc.core.linalg.lattice import fixed_lattice
from vcyc.core.linalg.matrix import IntMatrix
from vcyc.core.linalg.poly import IntPoly, cyclotomic_factorization

logger = logging.getLogger(__name__)


class Classification(NamedTuple):
    case: CaseTag
    witnesses: list[Witness]


class _Decision(NamedTuple):
    hdim_vcyc: int
    case: CaseTag
    witnesses: list[Witness]
    citations: list[Citation]


def _virtually_zn(rank: int, witnesses: list[Witness] | None = None) -> _Decision:
    witnesses = [
        *(witnesses or []),
        Witness(kind=WitnessKind.VIRTUALLY_ABELIAN, citation=Citation.VIRTUALLY_ZN, value=rank),
    ]
    if rank <= 1:
        return _Decision(0, CaseTag.VIRTUALLY_ZN, witnesses, [Citation.VIRTUALLY_ZN])
    return _Decision(
        virtually_zn_hdim_vcyc(rank), CaseTag.POLY_Z_MANY, witnesses, [Citation.VIRTUALLY_ZN, Citation.POLY_Z_CASE_3]
    )


def _decide_zn_by_z(g: ZnByZ) -> _Decision:
    a = g.matrix
    order = spectra.matrix_order(a)
    if order is not None:
        # Z^n ⋊ kZ is free abelian of rank n + 1.
        finite = Witness(kind=WitnessKind.FINITE_ORDER, citation=Citation.VIRTUALLY_ZN, k=order)
        return _virtually_zn(g.n + 1, [finite])

    fixed = spectra.max_fixed_rank(a)
    if fixed.rank == 0:
        remainder = cyclotomic_factorization(spectra.char_poly(a)).remainder
        witness = Witness(
            kind=WitnessKind.CYCLOTOMIC_FREE_REMAINDER,
            citation=Citation.POLY_Z_CASE_1,
            polynomial=list(remainder.coefficients),
        )
        return _Decision(
            g.n + 1, CaseTag.POLY_Z_EMPTY, [witness], [Citation.ZN_BY_Z_SMALL_KERNELS, Citation.POLY_Z_CASE_1]
        )

    lattice_witness = Witness(
        kind=WitnessKind.FIXED_LATTICE,
        citation=Citation.POLY_Z_CASE_2B if fixed.rank == 1 else Citation.POLY_Z_CASE_3,
        k=fixed.k_star,
        lattice=fixed_lattice(a, fixed.k_star),
        value=fixed.rank,
    )
    if fixed.rank == 1:
        return _Decision(
            g.n + 1,
            CaseTag.POLY_Z_UNIQUE_HIGH,
            [lattice_witness],
            [Citation.ZN_BY_Z_SMALL_KERNELS, Citation.POLY_Z_CASE_2B],
        )
    return _Decision(
        g.n + 2, CaseTag.POLY_Z_MANY, [lattice_witness], [Citation.ZN_BY_Z_LARGE_KERNEL, Citation.POLY_Z_CASE_3]
    )


def _decide_heisenberg_by_z(g: HeisenbergByZ) -> _Decision:
    rank = spectra.max_fixed_rank(g.f_bar).rank
    order = spectra.matrix_order(g.f_bar)
    if rank == 0:
        case, hdim = CaseTag.POLY_Z_UNIQUE_LOW, g.n + 1
        rule, poly_z_case = Citation.H_BY_Z_KERNELS_ZERO, Citation.POLY_Z_CASE_2A
    elif order is None:
        case, hdim = CaseTag.POLY_Z_UNIQUE_HIGH, g.n + 2
        rule, poly_z_case = Citation.H_BY_Z_NOT_PERIODIC, Citation.POLY_Z_CASE_2B
    else:
        case, hdim = CaseTag.POLY_Z_MANY, g.n + 3
        rule, poly_z_case = Citation.H_BY_Z_PERIODIC, Citation.POLY_Z_CASE_3

    witnesses = [
        Witness(kind=WitnessKind.NORMAL_CYCLIC_CENTER, citation=poly_z_case, value=g.epsilon),
        Witness(kind=WitnessKind.CASE_DISCRIMINATOR, citation=rule, k=order, value=rank),
    ]
    return _Decision(hdim, case, witnesses, [rule, poly_z_case])


def _decide_central_extension(g: CentralExtension) -> _Decision:
    if g.m == 1:
        witness = Witness(kind=WitnessKind.NORMAL_CYCLIC_CENTER, citation=Citation.POLY_Z_CASE_2B, value=1)
        return _Decision(
            g.n + 1, CaseTag.POLY_Z_UNIQUE_HIGH, [witness], [Citation.CENTRAL_RANK_ONE, Citation.POLY_Z_CASE_2B]
        )
    witness = Witness(kind=WitnessKind.CENTER_RANK, citation=Citation.POLY_Z_CASE_3, value=g.m)
    return _Decision(
        g.m + g.n + 1, CaseTag.POLY_Z_MANY, [witness], [Citation.CENTRAL_RANK_AT_LEAST_TWO, Citation.POLY_Z_CASE_3]
    )


def _decide_poly_z(g: GroupSpec) -> _Decision:
    match g:
        case FreeAbelian(n=n) | Crystallographic(n=n):
            return _virtually_zn(n)
        case ZnByZ(n=1, matrix=a):
            # Z^2 or the Klein bottle group; the dichotomy does not apply for n = 1.
            finite = Witness(kind=WitnessKind.FINITE_ORDER, citation=Citation.VIRTUALLY_ZN, k=spectra.matrix_order(a))
            return _virtually_zn(2, [finite])
        case ZnByZ():
            return _decide_zn_by_z(g)
        case HeisenbergByZ():
            return _decide_heisenberg_by_z(g)
        case CentralExtension():
            return _decide_central_extension(g)
    raise UnsupportedGroupError(f"{describe(g)} is not covered by the virtually poly-Z rules")


def compute_report(g: GroupSpec) -> DimReport:
    """Full dimension report for a valid spec. Products may come back interval-valued."""
    g = require_valid(g)
    match g:
        case Product(left=left, right=right):
            return product_dims(compute_report(left), compute_report(right))
        case ZOneOverP():
            return DimReport(
                spec=g,
                vcd=None,
                hdim_fin=2,
                hdim_vcyc=1,
                case=CaseTag.Z_ONE_OVER_P,
                citations=[Citation.Z_ONE_OVER_P],
            )
        case CountableLocal():
            entry = low_dim_table(g)
            return DimReport(
                spec=g,
                vcd=None,
                hdim_fin=entry.hdim_fin,
                hdim_vcyc=entry.hdim_vcyc,
                case=entry.case,
                citations=entry.citations,
            )

    vcd = vcd_of(g)
    if vcd is None:
        raise UnsupportedGroupError(f"No dimension rule covers {describe(g)}")
    decision = _decide_poly_z(g)
    logger.debug(f"{describe(g)}: vcd {vcd}, case {decision.case}, hdim_vcyc {decision.hdim_vcyc}")
    return DimReport(
        spec=g,
        vcd=vcd,
        hdim_fin=vcd,
        hdim_vcyc=decision.hdim_vcyc,
        case=decision.case,
        witnesses=decision.witnesses,
        citations=[Citation.VCD_ADDITIVE, *decision.citations],
    )


def hdim_fin(g: GroupSpec) -> int:
    g = require_valid(g)
    vcd = vcd_of(g)
    if vcd is not None:
        return vcd
    match g:
        case ZOneOverP():
            return 2
        case CountableLocal():
            return low_dim_table(g).hdim_fin
    raise UnsupportedGroupError(f"No rule gives hdim_fin for {describe(g)}")


def hdim_vcyc(g: GroupSpec) -> int | Interval:
    return compute_report(g).hdim_vcyc


def classify_case(g: GroupSpec) -> Classification:
    """The case of the virtually poly-Z theorem realized by `g`, with its witnesses."""
    if not is_virtually_poly_z(g):
        raise UnsupportedGroupError(f"{describe(g)} is not virtually poly-Z")
    report = compute_report(g)
    return Classification(report.case, report.witnesses)


def _automorphism(g: GroupSpec) -> IntMatrix | None:
    match g:
        case ZnByZ(matrix=a):
            return a
        case HeisenbergByZ(f_bar=f_bar):
            return f_bar
    return None


def _has_exact_order(a: IntMatrix, k: int) -> bool:
    if k < 1 or not a.power(k).is_identity():
        return False
    return all(not a.power(d).is_identity() for d in sympy.divisors(k) if d < k)


def verify_witness(g: GroupSpec, witness: Witness) -> bool:
    """
    Check a witness against the group it was produced for.

    finite_order: the automorphism has order exactly k.
    fixed_lattice: the lattice is ker(A^k − 1), fixed pointwise by A^k, of rank `value`.
    cyclotomic_free_remainder: the polynomial is char(A) and has no cyclotomic factor.
    virtually_abelian: a free abelian subgroup of rank `value` has finite index.
    normal_cyclic_center: the center is infinite cyclic and the stable letter acts on it by `value`.
    center_rank: the free part of the center has rank `value`.
    case_discriminator: `value` is the maximal fixed rank of f̄ and `k` its order (None if infinite).
    """
    g = normalize_spec(g)
    a = _automorphism(g)
    match witness.kind:
        case WitnessKind.FINITE_ORDER:
            return a is not None and witness.k is not None and _has_exact_order(a, witness.k)
        case WitnessKind.FIXED_LATTICE:
            if a is None or witness.k is None or witness.lattice is None or witness.k < 1:
                return False
            lattice = witness.lattice
            return (
                lattice == fixed_lattice(a, witness.k)
                and lattice.rank == witness.value
                and lattice.is_invariant_under(a, witness.k)
            )
        case WitnessKind.CYCLOTOMIC_FREE_REMAINDER:
            if a is None or witness.polynomial is None:
                return False
            p = IntPoly.of(*witness.polynomial)
            return p == spectra.char_poly(a) and not cyclotomic_factorization(p).factors
        case WitnessKind.VIRTUALLY_ABELIAN:
            return witness.value is not None and virtually_abelian_rank(g) == witness.value
        case WitnessKind.NORMAL_CYCLIC_CENTER:
            match g:
                case HeisenbergByZ(epsilon=epsilon):
                    return witness.value == epsilon
                case CentralExtension(m=1):
                    return witness.value == 1
            return False
        case WitnessKind.CENTER_RANK:
            return witness.value is not None and center_rank(g) == witness.value
        case WitnessKind.CASE_DISCRIMINATOR:
            if not isinstance(g, HeisenbergByZ):
                return False
            return witness.value == spectra.max_fixed_rank(g.f_bar).rank and witness.k == spectra.matrix_order(g.f_bar)
    return False
