# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Structural invariants of supported groups: virtual cohomological dimension,
rank of the center and the rank of a free abelian subgroup of finite index.
"""

from vcyc.core.groups.spec import (
    CentralExtension,
    Crystallographic,
    FreeAbelian,
    GroupSpec,
    HeisenbergByZ,
    Product,
    ZnByZ,
)
from vcyc.core.linalg import spectra
from vcyc.core.linalg.lattice import Lattice, fixed_lattice, kernel_lattice
from vcyc.core.linalg.matrix import IntMatrix


def vcd_of(g: GroupSpec) -> int | None:
    """Hirsch length of a virtually poly-Z group, None for every other variant."""
    match g:
        case FreeAbelian(n=n) | Crystallographic(n=n):
            return n
        case ZnByZ(n=n):
            return n + 1
        case CentralExtension(m=m, n=n):
            return m + n
        case HeisenbergByZ(n=n):
            return n + 2
        case Product(left=left, right=right):
            a, b = vcd_of(left), vcd_of(right)
            if a is None or b is None:
                return None
            return a + b
    return None


def common_fixed_lattice(n: int, matrices: list[IntMatrix]) -> Lattice:
    """Vectors fixed by every matrix in `matrices`."""
    if not matrices:
        return Lattice.full(n)
    identity = IntMatrix.identity(n)
    return kernel_lattice(IntMatrix.vstack(*(m - identity for m in matrices)))


def center_rank(g: GroupSpec) -> int | None:
    """
    Rank of the free part of the center.

    For HeisenbergByZ this is a lower bound: the pair (f_bar, epsilon) cannot
    tell whether the stable letter itself is central.
    """
    match g:
        case FreeAbelian(n=n):
            return n
        case ZnByZ(matrix=a):
            return fixed_lattice(a, 1).rank + (1 if a.is_identity() else 0)
        case CentralExtension(m=m):
            return m
        case HeisenbergByZ(epsilon=epsilon):
            return 1 if epsilon == 1 else 0
        case Crystallographic(n=n, point_group=point_group):
            return common_fixed_lattice(n, list(point_group)).rank
        case Product(left=left, right=right):
            a, b = center_rank(left), center_rank(right)
            if a is None or b is None:
                return None
            return a + b
    return None


def _all_forms_zero(forms: list[IntMatrix]) -> bool:
    return all(form.is_zero() for form in forms)


def virtually_abelian_rank(g: GroupSpec) -> int | None:
    """Rank of a free abelian subgroup of finite index, or None if there is none."""
    match g:
        case FreeAbelian(n=n) | Crystallographic(n=n):
            return n
        case ZnByZ(n=n, matrix=a):
            return n + 1 if spectra.matrix_order(a) is not None else None
        case CentralExtension(m=m, n=n, form=form) if _all_forms_zero(list(form)):
            return m + n
        case Product(left=left, right=right):
            a, b = virtually_abelian_rank(left), virtually_abelian_rank(right)
            if a is None or b is None:
                return None
            return a + b
    return None


def is_orientable(g: GroupSpec) -> bool:
    """Whether the top cohomology of the standard model is Z (rather than Z/2)."""
    match g:
        case ZnByZ(matrix=a):
            return a.det() == 1
        case HeisenbergByZ(f_bar=f_bar, epsilon=epsilon):
            return f_bar.det() * epsilon == 1
        case Crystallographic(point_group=point_group):
            return all(element.det() == 1 for element in point_group)
        case Product(left=left, right=right):
            return is_orientable(left) and is_orientable(right)
    return True
