# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Hermite and Smith normal forms over the integers.

Both forms are computed with explicit unimodular transforms so that callers
can check H = M·U and D = S·M·T exactly.
"""

from typing import NamedTuple

from vcyc.core.linalg.matrix import IntMatrix


class HermiteForm(NamedTuple):
    H: IntMatrix
    U: IntMatrix


class SmithForm(NamedTuple):
    D: IntMatrix
    invariants: list[int]
    S: IntMatrix
    T: IntMatrix


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _combine_columns(rows: list[list[int]], c: int, j: int, coeffs: tuple[int, int, int, int]) -> None:
    """Replace (col_c, col_j) by (p*col_c + q*col_j, r*col_c + s*col_j) in place."""
    p, q, r, s = coeffs
    for row in rows:
        a, b = row[c], row[j]
        row[c] = p * a + q * b
        row[j] = r * a + s * b


def _add_column_multiple(rows: list[list[int]], target: int, source: int, factor: int) -> None:
    for row in rows:
        row[target] += factor * row[source]


def hnf(m: IntMatrix) -> HermiteForm:
    """Column-style Hermite normal form.

    Pivots are positive, entries to the left of a pivot lie in [0, pivot) and
    zero columns are collected on the right.
    """
    h = m.rows()
    u = IntMatrix.identity(m.ncols).rows()
    c = 0
    for i in range(m.nrows):
        if c == m.ncols:
            break
        for j in range(c + 1, m.ncols):
            if h[i][j] == 0:
                continue
            a, b = h[i][c], h[i][j]
            g, x, y = xgcd(a, b)
            coeffs = (x, y, -b // g, a // g)
            _combine_columns(h, c, j, coeffs)
            _combine_columns(u, c, j, coeffs)
        pivot = h[i][c]
        if pivot == 0:
            continue
        if pivot < 0:
            for rows in (h, u):
                for row in rows:
                    row[c] = -row[c]
            pivot = -pivot
        for j in range(c):
            q = h[i][j] // pivot
            if q:
                _add_column_multiple(h, j, c, -q)
                _add_column_multiple(u, j, c, -q)
        c += 1
    return HermiteForm(
        IntMatrix.from_rows(h, ncols=m.ncols),
        IntMatrix.from_rows(u, ncols=m.ncols),
    )


def hnf_rank(h: IntMatrix) -> int:
    """Number of nonzero columns of a matrix already in column HNF."""
    return sum(1 for col in h.columns() if any(col))


def snf(m: IntMatrix) -> SmithForm:
    """Smith normal form D = S·M·T with d_1 | d_2 | ... on the diagonal."""
    nrows, ncols = m.nrows, m.ncols
    d = m.rows()
    s = IntMatrix.identity(nrows).rows()
    t = IntMatrix.identity(ncols).rows()

    def swap_rows(i: int, j: int) -> None:
        d[i], d[j] = d[j], d[i]
        s[i], s[j] = s[j], s[i]

    def swap_cols(i: int, j: int) -> None:
        for rows in (d, t):
            for row in rows:
                row[i], row[j] = row[j], row[i]

    def add_row(target: int, source: int, factor: int) -> None:
        for rows in (d, s):
            rows[target] = [x + factor * y for x, y in zip(rows[target], rows[source], strict=True)]

    def add_col(target: int, source: int, factor: int) -> None:
        for rows in (d, t):
            _add_column_multiple(rows, target, source, factor)

    def move_smallest_to(k: int, row_range: range, col_range: range) -> bool:
        best: tuple[int, int] | None = None
        for i in row_range:
            for j in col_range:
                if d[i][j] and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            return False
        if best[0] != k:
            swap_rows(k, best[0])
        if best[1] != k:
            swap_cols(k, best[1])
        return True

    for k in range(min(nrows, ncols)):
        if not move_smallest_to(k, range(k, nrows), range(k, ncols)):
            break
        while True:
            pivot = d[k][k]
            clean = True
            for i in range(k + 1, nrows):
                if d[i][k]:
                    add_row(i, k, -(d[i][k] // pivot))
                    clean = clean and d[i][k] == 0
            for j in range(k + 1, ncols):
                if d[k][j]:
                    add_col(j, k, -(d[k][j] // pivot))
                    clean = clean and d[k][j] == 0
            if not clean:
                # A nonzero remainder is smaller than the pivot; bring it to (k, k).
                move_smallest_to(k, range(k, nrows), range(k, k + 1))
                move_smallest_to(k, range(k, k + 1), range(k, ncols))
                continue
            offender = next(
                (i for i in range(k + 1, nrows) for j in range(k + 1, ncols) if d[i][j] % pivot),
                None,
            )
            if offender is None:
                break
            add_row(k, offender, 1)
        if d[k][k] < 0:
            d[k] = [-x for x in d[k]]
            s[k] = [-x for x in s[k]]

    invariants = [d[i][i] for i in range(min(nrows, ncols)) if d[i][i]]
    return SmithForm(
        IntMatrix.from_rows(d, ncols=ncols),
        invariants,
        IntMatrix.from_rows(s, ncols=nrows),
        IntMatrix.from_rows(t, ncols=ncols),
    )
