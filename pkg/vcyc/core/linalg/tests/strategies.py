# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Hypothesis strategies producing small unimodular integer matrices."""

from hypothesis import strategies as st

from vcyc.core.linalg.matrix import IntMatrix

BLOCKS: list[IntMatrix] = [
    IntMatrix.from_rows([[1]]),
    IntMatrix.from_rows([[-1]]),
    IntMatrix.from_rows([[0, -1], [1, 0]]),  # order 4
    IntMatrix.from_rows([[0, -1], [1, -1]]),  # order 3
    IntMatrix.from_rows([[1, -1], [1, 0]]),  # order 6
    IntMatrix.from_rows([[0, 1], [1, 0]]),  # order 2
    IntMatrix.from_rows([[1, 1], [0, 1]]),  # unipotent
    IntMatrix.from_rows([[2, 1], [1, 1]]),  # hyperbolic
    IntMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]]),  # order 3 permutation
]


def _elementary(n: int, i: int, j: int, c: int) -> IntMatrix:
    rows = IntMatrix.identity(n).rows()
    rows[i][j] += c
    return IntMatrix.from_rows(rows)


@st.composite
def block_matrices(draw: st.DrawFn, min_n: int = 1, max_n: int = 4) -> IntMatrix:
    """Block-diagonal sums of finite-order, unipotent and hyperbolic blocks."""
    n = draw(st.integers(min_n, max_n))
    blocks: list[IntMatrix] = []
    size = 0
    while size < n:
        candidates = [b for b in BLOCKS if b.nrows <= n - size]
        block = draw(st.sampled_from(candidates))
        blocks.append(block)
        size += block.nrows
    return IntMatrix.block_diag(*blocks)


@st.composite
def unimodular_matrices(draw: st.DrawFn, min_n: int = 1, max_n: int = 4, bound: int = 3) -> IntMatrix:
    """Unimodular matrices with entries in [-bound, bound].

    Starts from a block sum or a signed permutation and applies bounded
    elementary conjugations or row operations, skipping any step that would
    leave the entry range.
    """
    if draw(st.booleans()):
        a = draw(block_matrices(min_n, max_n))
    else:
        n = draw(st.integers(min_n, max_n))
        perm = draw(st.permutations(range(n)))
        signs = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
        a = IntMatrix.from_rows([[signs[i] if j == perm[i] else 0 for j in range(n)] for i in range(n)])
    n = a.nrows
    if n < 2:
        return a
    conjugate = draw(st.booleans())
    steps = draw(st.integers(0, 4))
    for _ in range(steps):
        i, j = draw(st.sampled_from([(i, j) for i in range(n) for j in range(n) if i != j]))
        c = draw(st.sampled_from([1, -1]))
        e = _elementary(n, i, j, c)
        candidate = e @ a @ _elementary(n, i, j, -c) if conjugate else e @ a
        if candidate.max_abs() <= bound:
            a = candidate
    return a
