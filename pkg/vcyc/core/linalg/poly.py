# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Dense integer polynomials and cyclotomic trial division.

Coefficients are stored in ascending degree order, so 1 - 2x + x^3 is
(1, -2, 0, 1). Trailing zeros are trimmed; the zero polynomial has no
coefficients and degree -1.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import sympy

from vcyc.core.linalg.matrix import IntMatrix, LinalgError

logger = logging.getLogger(__name__)


class NotMonicError(LinalgError):
    """Raised when an operation needs a monic polynomial."""


@dataclass(frozen=True, slots=True)
class IntPoly:
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coefficients", coeffs[:end])

    @classmethod
    def of(cls, *coefficients: int) -> "IntPoly":
        return cls(tuple(coefficients))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def is_one(self) -> bool:
        return self.coefficients == (1,)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (size - len(self.coefficients))
        b = other.coefficients + (0,) * (size - len(other.coefficients))
        return IntPoly(tuple(x + y for x, y in zip(a, b, strict=True)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def __pow__(self, k: int) -> "IntPoly":
        result = IntPoly((1,))
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division with remainder by a monic divisor, exact over the integers."""
        if not divisor.is_monic():
            raise NotMonicError(f"Division requires a monic divisor, got {divisor}")
        remainder = list(self.coefficients)
        dd = divisor.degree
        if len(remainder) - 1 < dd:
            return IntPoly(()), self
        quotient = [0] * (len(remainder) - dd)
        for shift in range(len(remainder) - 1 - dd, -1, -1):
            lead = remainder[shift + dd]
            if lead:
                quotient[shift] = lead
                for i, c in enumerate(divisor.coefficients):
                    remainder[shift + i] -= lead * c
        return IntPoly(tuple(quotient)), IntPoly(tuple(remainder))

    def __call__(self, value: int) -> int:
        result = 0
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def evaluate_matrix(self, a: IntMatrix) -> IntMatrix:
        """Horner evaluation p(A) for a square matrix A."""
        a.require_square("evaluate_matrix")
        identity = IntMatrix.identity(a.nrows)
        result = IntMatrix.zeros(a.nrows, a.nrows)
        for c in reversed(self.coefficients):
            result = result @ a + identity.scale(c)
        return result

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for i, c in reversed(list(enumerate(self.coefficients))):
            if c == 0:
                continue
            sign = (" + " if c > 0 else " - ") if parts else ("" if c > 0 else "-")
            term = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            coeff = str(abs(c)) if (abs(c) != 1 or not term) else ""
            parts.append(sign + coeff + term)
        return "".join(parts)


@lru_cache(maxsize=256)
def cyclotomic_poly(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, of degree totient(d)."""
    if d < 1:
        raise LinalgError(f"Cyclotomic polynomials are indexed by d >= 1, got {d}")
    x = sympy.Symbol("x")
    descending = sympy.Poly(sympy.cyclotomic_poly(d, x), x).all_coeffs()
    return IntPoly(tuple(int(c) for c in reversed(descending)))


@lru_cache(maxsize=64)
def cyclotomic_orders_up_to(degree: int) -> tuple[int, ...]:
    """All d with totient(d) <= degree, ascending.

    totient(d) >= sqrt(d/2), so every such d is at most 2·degree².
    """
    if degree < 1:
        return ()
    return tuple(d for d in range(1, 2 * degree * degree + 1) if sympy.totient(d) <= degree)


@dataclass(frozen=True)
class CyclotomicFactorization:
    factors: tuple[tuple[int, int], ...]
    remainder: IntPoly

    @property
    def orders(self) -> list[int]:
        return [d for d, _ in self.factors]

    @property
    def is_product_of_cyclotomics(self) -> bool:
        return self.remainder.is_one()

    def reassemble(self) -> IntPoly:
        result = self.remainder
        for d, mult in self.factors:
            result = result * cyclotomic_poly(d) ** mult
        return result


def cyclotomic_factorization(p: IntPoly) -> CyclotomicFactorization:
    """Strip every cyclotomic factor from a monic polynomial.

    The remainder is 1 exactly when every root of p is a root of unity.
    """
    if not p.is_monic():
        raise NotMonicError(f"cyclotomic_factorization needs a monic nonzero polynomial, got {p}")
    remainder = p
    factors: list[tuple[int, int]] = []
    for d in cyclotomic_orders_up_to(p.degree):
        phi = cyclotomic_poly(d)
        mult = 0
        while remainder.degree >= phi.degree:
            quotient, rest = divmod(remainder, phi)
            if not rest.is_zero():
                break
            remainder = quotient
            mult += 1
        if mult:
            factors.append((d, mult))
        if remainder.degree == 0:
            break
    logger.debug(f"Cyclotomic factorization of {p}: factors={factors}, remainder={remainder}")
    return CyclotomicFactorization(tuple(factors), remainder)
