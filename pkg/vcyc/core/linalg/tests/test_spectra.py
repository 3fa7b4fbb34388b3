# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Tests for characteristic polynomials, matrix order, fixed ranks and exterior powers"""

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from vcyc.core.linalg.matrix import DimensionError, IntMatrix, NotSquareError, NotUnimodularError
from vcyc.core.linalg.oracles import brute_force_max_fixed_rank, brute_force_order
from vcyc.core.linalg.spectra import FixedRank, char_poly, exterior_power, matrix_order, max_fixed_rank
from vcyc.core.linalg.tests.strategies import unimodular_matrices

ROT90 = IntMatrix.from_rows([[0, -1], [1, 0]])
UNIPOTENT = IntMatrix.from_rows([[1, 1], [0, 1]])
HYPERBOLIC = IntMatrix.from_rows([[2, 1], [1, 1]])

# lcm{d : totient(d) <= 4}
ORACLE_DEPTH = 120


@st.composite
def square_matrices(draw: st.DrawFn, max_n: int = 4, bound: int = 3) -> IntMatrix:
    n = draw(st.integers(1, max_n))
    return IntMatrix(n, n, tuple(draw(st.lists(st.integers(-bound, bound), min_size=n * n, max_size=n * n))))


class TestCharPoly:
    """Test cases for char_poly"""

    @pytest.mark.parametrize(
        "a,coefficients",
        [
            (IntMatrix.identity(2), (1, -2, 1)),
            (ROT90, (1, 0, 1)),
            (HYPERBOLIC, (1, -3, 1)),
            (IntMatrix.zeros(0, 0), (1,)),
        ],
    )
    def test_known_values(self, a: IntMatrix, coefficients: tuple[int, ...]) -> None:
        assert char_poly(a).coefficients == coefficients

    def test_rejects_rectangular(self) -> None:
        with pytest.raises(NotSquareError):
            char_poly(IntMatrix.zeros(2, 3))

    @settings(max_examples=200, deadline=None, derandomize=True)
    @given(a=square_matrices())
    def test_matches_sympy_and_cayley_hamilton(self, a: IntMatrix) -> None:
        p = char_poly(a)
        assert p.is_monic()
        assert p.degree == a.nrows
        expected = sympy.Matrix(a.rows()).charpoly().all_coeffs()
        assert p.coefficients == tuple(int(c) for c in reversed(expected))
        assert p.evaluate_matrix(a).is_zero()
        assert a.det() == int(sympy.Matrix(a.rows()).det())


class TestMatrixOrder:
    """Test cases for matrix_order"""

    @pytest.mark.parametrize(
        "a,order",
        [
            (ROT90, 4),
            (UNIPOTENT, None),
            (HYPERBOLIC, None),
            (IntMatrix.identity(3), 1),
            (-IntMatrix.identity(2), 2),
            (IntMatrix.from_rows([[0, -1], [1, -1]]), 3),
            (IntMatrix.from_rows([[1, -1], [1, 0]]), 6),
            (IntMatrix.block_diag(ROT90, IntMatrix.from_rows([[0, -1], [1, -1]])), 12),
            # Eigenvalues -1, -1 but not semisimple.
            (IntMatrix.from_rows([[-1, 1], [0, -1]]), None),
        ],
    )
    def test_known_orders(self, a: IntMatrix, order: int | None) -> None:
        assert matrix_order(a) == order

    def test_rejects_non_unimodular(self) -> None:
        with pytest.raises(NotUnimodularError):
            matrix_order(IntMatrix.diagonal([2, 1]))

    @settings(max_examples=500, deadline=None, derandomize=True)
    @given(a=unimodular_matrices(max_n=4))
    def test_direct_powering_oracle(self, a: IntMatrix) -> None:
        assert matrix_order(a) == brute_force_order(a, ORACLE_DEPTH)


class TestMaxFixedRank:
    """Test cases for max_fixed_rank"""

    @pytest.mark.parametrize(
        "a,expected",
        [
            (HYPERBOLIC, FixedRank(1, 0)),
            (UNIPOTENT, FixedRank(1, 1)),
            (IntMatrix.block_diag(ROT90, IntMatrix.identity(1)), FixedRank(4, 3)),
            (IntMatrix.block_diag(HYPERBOLIC, -IntMatrix.identity(1)), FixedRank(2, 1)),
        ],
    )
    def test_known_values(self, a: IntMatrix, expected: FixedRank) -> None:
        assert max_fixed_rank(a) == expected

    def test_block_example_matches_brute_force(self) -> None:
        a = IntMatrix.block_diag(ROT90, IntMatrix.identity(1))
        assert brute_force_max_fixed_rank(a, ORACLE_DEPTH).rank == 3

    def test_rejects_non_unimodular(self) -> None:
        with pytest.raises(NotUnimodularError):
            max_fixed_rank(IntMatrix.diagonal([3]))

    @settings(max_examples=500, deadline=None, derandomize=True)
    @given(a=unimodular_matrices(max_n=4))
    def test_brute_force_oracle(self, a: IntMatrix) -> None:
        assert max_fixed_rank(a).rank == brute_force_max_fixed_rank(a, ORACLE_DEPTH).rank


class TestExteriorPower:
    """Test cases for exterior_power"""

    def test_top_power_is_determinant(self) -> None:
        a = IntMatrix.from_rows([[3, 5], [7, 11]])
        assert exterior_power(a, 2) == IntMatrix.from_rows([[3 * 11 - 5 * 7]])

    def test_first_power_is_identity_map(self) -> None:
        assert exterior_power(HYPERBOLIC, 1) == HYPERBOLIC

    def test_zeroth_power(self) -> None:
        assert exterior_power(HYPERBOLIC, 0) == IntMatrix.from_rows([[1]])

    def test_identity(self) -> None:
        assert exterior_power(IntMatrix.identity(3), 2) == IntMatrix.identity(3)

    def test_rejects_large_k(self) -> None:
        with pytest.raises(DimensionError):
            exterior_power(IntMatrix.identity(2), 3)

    @settings(max_examples=150, deadline=None, derandomize=True)
    @given(data=st.data())
    def test_multiplicative(self, data: st.DataObject) -> None:
        a = data.draw(square_matrices(max_n=4))
        n = a.nrows
        b = IntMatrix(n, n, tuple(data.draw(st.lists(st.integers(-3, 3), min_size=n * n, max_size=n * n))))
        k = data.draw(st.integers(0, n))
        assert exterior_power(a @ b, k) == exterior_power(a, k) @ exterior_power(b, k)
