# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Tests for kernels, saturation and fixed lattices"""

import pytest
from hypothesis import given, settings

from vcyc.core.linalg.lattice import Lattice, fixed_lattice, kernel_lattice, lattice_of, saturate
from vcyc.core.linalg.matrix import IntMatrix, NotSquareError
from vcyc.core.linalg.normal_forms import snf
from vcyc.core.linalg.tests.strategies import unimodular_matrices

ROT90 = IntMatrix.from_rows([[0, -1], [1, 0]])
UNIPOTENT = IntMatrix.from_rows([[1, 1], [0, 1]])


class TestKernelLattice:
    """Test cases for kernel_lattice"""

    def test_identity_has_zero_kernel(self) -> None:
        assert kernel_lattice(IntMatrix.identity(3)).rank == 0

    def test_zero_matrix_has_full_kernel(self) -> None:
        assert kernel_lattice(IntMatrix.zeros(3, 3)) == Lattice.full(3)

    def test_primitive_kernel_vector(self) -> None:
        lattice = kernel_lattice(IntMatrix.from_rows([[1, 1], [0, 0]]))
        assert lattice.vectors() == [[1, -1]]

    def test_kernel_is_saturated(self) -> None:
        # 2x - 4y = 0 has the primitive solution (2, 1), not (4, 2).
        lattice = kernel_lattice(IntMatrix.from_rows([[2, -4]]))
        assert lattice.vectors() == [[2, 1]]

    def test_empty_column_matrix(self) -> None:
        assert kernel_lattice(IntMatrix.zeros(2, 0)) == Lattice.zero(0)

    def test_matrix_without_rows(self) -> None:
        assert kernel_lattice(IntMatrix.zeros(0, 2)) == Lattice.full(2)

    @settings(max_examples=200, deadline=None, derandomize=True)
    @given(a=unimodular_matrices(max_n=4))
    def test_rank_nullity(self, a: IntMatrix) -> None:
        m = a - IntMatrix.identity(a.nrows)
        lattice = kernel_lattice(m)
        assert lattice.rank == a.nrows - m.rank()
        for v in lattice.vectors():
            assert m.apply(v) == [0] * m.nrows


class TestSaturate:
    """Test cases for saturate"""

    def test_primitive_vector_extraction(self) -> None:
        assert saturate(IntMatrix.from_columns([[2, 0]])).vectors() == [[1, 0]]

    def test_full_rank_sublattice_saturates_to_everything(self) -> None:
        generators = IntMatrix.from_columns([[2, 2], [0, 4]])
        assert snf(generators).invariants == [2, 4]
        assert saturate(generators) == Lattice.full(2)

    def test_idempotent(self) -> None:
        lattice = saturate(IntMatrix.from_columns([[3, 6, 9], [0, 2, 2]]))
        assert saturate(lattice.basis) == lattice

    def test_rank_independent_of_generating_set(self) -> None:
        a = lattice_of(3, [[1, 1, 0], [0, 1, 1]])
        b = lattice_of(3, [[1, 2, 1], [1, 0, -1], [2, 2, 0]])
        assert a == b
        assert a.rank == 2


class TestFixedLattice:
    """Test cases for fixed_lattice"""

    @pytest.mark.parametrize("k", [1, 2, 7])
    def test_identity_fixes_everything(self, k: int) -> None:
        assert fixed_lattice(IntMatrix.identity(3), k) == Lattice.full(3)

    def test_unipotent_fixed_space(self) -> None:
        assert fixed_lattice(UNIPOTENT, 5).vectors() == [[1, 0]]

    def test_rotation(self) -> None:
        assert fixed_lattice(ROT90, 4) == Lattice.full(2)
        assert fixed_lattice(ROT90, 1).rank == 0

    def test_rejects_rectangular(self) -> None:
        with pytest.raises(NotSquareError):
            fixed_lattice(IntMatrix.zeros(2, 3), 1)

    @settings(max_examples=200, deadline=None, derandomize=True)
    @given(a=unimodular_matrices(max_n=4))
    def test_divisibility_gives_containment(self, a: IntMatrix) -> None:
        for k, multiple in [(1, 2), (2, 4), (3, 6), (1, 12)]:
            small = fixed_lattice(a, k)
            large = fixed_lattice(a, multiple)
            assert small.is_sublattice_of(large)
            assert small.is_invariant_under(a, k)
