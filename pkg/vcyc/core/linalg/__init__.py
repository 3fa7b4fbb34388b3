# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Exact integer linear algebra."""

from .abelian import AbelianGroup, cokernel
from .lattice import Lattice, fixed_lattice, kernel_lattice, lattice_of, saturate
from .matrix import DimensionError, IntMatrix, LinalgError, NotSquareError, NotUnimodularError
from .normal_forms import HermiteForm, SmithForm, hnf, snf
from .poly import CyclotomicFactorization, IntPoly, NotMonicError, cyclotomic_factorization, cyclotomic_poly
from .spectra import FixedRank, char_poly, exterior_power, matrix_order, max_fixed_rank

__all__ = [
    "AbelianGroup",
    "CyclotomicFactorization",
    "DimensionError",
    "FixedRank",
    "HermiteForm",
    "IntMatrix",
    "IntPoly",
    "Lattice",
    "LinalgError",
    "NotMonicError",
    "NotSquareError",
    "NotUnimodularError",
    "SmithForm",
    "char_poly",
    "cokernel",
    "cyclotomic_factorization",
    "cyclotomic_poly",
    "exterior_power",
    "fixed_lattice",
    "hnf",
    "kernel_lattice",
    "lattice_of",
    "matrix_order",
    "max_fixed_rank",
    "saturate",
    "snf",
]
