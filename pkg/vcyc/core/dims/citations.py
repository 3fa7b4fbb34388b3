# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Anchors naming the result each dimension value rests on.

Reports carry these strings verbatim so that golden tests can assert which
rule fired, not only which number came out.
"""

from enum import StrEnum


class Citation(StrEnum):
    POLY_Z_CASE_1 = "theorem:virtually-poly-Z/case-1"
    POLY_Z_CASE_2A = "theorem:virtually-poly-Z/case-2a"
    POLY_Z_CASE_2B = "theorem:virtually-poly-Z/case-2b"
    POLY_Z_CASE_3 = "theorem:virtually-poly-Z/case-3"
    VIRTUALLY_ZN = "example:virtually-Zn"
    ZN_BY_Z_SMALL_KERNELS = "theorem:Zn-by-Z/dichotomy-1"
    ZN_BY_Z_LARGE_KERNEL = "theorem:Zn-by-Z/dichotomy-2"
    CENTRAL_RANK_ONE = "theorem:central-extension/m-equals-1"
    CENTRAL_RANK_AT_LEAST_TWO = "theorem:central-extension/m-at-least-2"
    H_BY_Z_KERNELS_ZERO = "theorem:H-by-Z/case-1"
    H_BY_Z_NOT_PERIODIC = "theorem:H-by-Z/case-2"
    H_BY_Z_PERIODIC = "theorem:H-by-Z/case-3"
    SANDWICH = "corollary:sandwich"
    PRODUCTS = "corollary:products"
    PRODUCTS_SHARP = "remark:products-sharp"
    LOW_DIM_LOCALLY_VC = "theorem:low-dim/part-1"
    LOW_DIM_PROPER_LE_ONE = "theorem:low-dim/part-2"
    LOCALLY_FINITE = "remark:locally-finite-characterization"
    Z_ONE_OVER_P = "example:Z-one-over-p"
    VCD_ADDITIVE = "lemma:poly-Z/vcd-additive"
    TOP_COHOMOLOGY = "lemma:poly-Z/top-cohomology"


DESCRIPTIONS: dict[Citation, str] = {
    Citation.POLY_Z_CASE_1: "every finite-index subgroup has finite center: hdim_vcyc = vcd",
    Citation.POLY_Z_CASE_2A: "normal infinite cyclic C, a class [W] with vcd(N_G[W]) ≤ vcd − 2: hdim = vcd − 1",
    Citation.POLY_Z_CASE_2B: "infinite normal cyclic C, every class [W] has vcd(N_G[W]) = vcd − 1: hdim_vcyc = vcd",
    Citation.POLY_Z_CASE_3: "a finite-index subgroup has Z^2 in its center: hdim_vcyc = vcd + 1",
    Citation.VIRTUALLY_ZN: "virtually Z^n: hdim_vcyc is 0 for n ≤ 1 and n + 1 otherwise",
    Citation.ZN_BY_Z_SMALL_KERNELS: "Z^n ⋊_A Z with every ker(A^k − 1) of rank ≤ 1: hdim_vcyc = n + 1",
    Citation.ZN_BY_Z_LARGE_KERNEL: "Z^n ⋊_A Z with some ker(A^k − 1) of rank ≥ 2: hdim_vcyc = n + 2",
    Citation.CENTRAL_RANK_ONE: "central extension with cent(G) = Z: hdim_vcyc = n + 1",
    Citation.CENTRAL_RANK_AT_LEAST_TWO: "central extension with cent(G) = Z^m, m ≥ 2: hdim_vcyc = m + n + 1",
    Citation.H_BY_Z_KERNELS_ZERO: "H ⋊_f Z with every ker(f̄^k − 1) zero: hdim_vcyc = n + 1",
    Citation.H_BY_Z_NOT_PERIODIC: "H ⋊_f Z with a nonzero kernel and f̄ not periodic: hdim_vcyc = n + 2",
    Citation.H_BY_Z_PERIODIC: "H ⋊_f Z with f̄ periodic: hdim_vcyc = n + 3",
    Citation.SANDWICH: "hdim_fin − 1 ≤ hdim_vcyc ≤ hdim_fin + 1",
    Citation.PRODUCTS: "hdim_vcyc(G × H) ≤ hdim_vcyc(G) + hdim_vcyc(H) + 3",
    Citation.PRODUCTS_SHARP: "products whose factors have infinite centers fall into the Z^2-center case",
    Citation.LOW_DIM_LOCALLY_VC: "countable locally virtually cyclic groups",
    Citation.LOW_DIM_PROPER_LE_ONE: "countable groups with hdim_fin ≤ 1",
    Citation.LOCALLY_FINITE: "infinite locally finite exactly when both dimensions are 1",
    Citation.Z_ONE_OVER_P: "Z[1/p] has hdim_fin = 2 and hdim_vcyc = 1",
    Citation.VCD_ADDITIVE: "vcd is additive in extensions and equals the Hirsch length",
    Citation.TOP_COHOMOLOGY: "the top cohomology of a poly-Z group is Z or Z/2",
}
