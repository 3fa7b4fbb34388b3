# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Saturated sublattices of Z^n: kernels, saturation and fixed lattices."""

from collections.abc import Sequence
from dataclasses import dataclass

from vcyc.core.linalg.matrix import DimensionError, IntMatrix, LinalgError
from vcyc.core.linalg.normal_forms import hnf, hnf_rank


@dataclass(frozen=True, slots=True)
class Lattice:
    """A saturated sublattice of Z^n.

    The basis is an n x r matrix whose columns are the basis vectors, kept in
    column HNF so that two lattices are equal exactly when their bases are.
    """

    ambient_rank: int
    basis: IntMatrix

    def __post_init__(self) -> None:
        if self.basis.nrows != self.ambient_rank:
            raise DimensionError(f"Basis has {self.basis.nrows} rows but the ambient rank is {self.ambient_rank}")

    @property
    def rank(self) -> int:
        return self.basis.ncols

    @classmethod
    def zero(cls, n: int) -> "Lattice":
        return cls(n, IntMatrix.zeros(n, 0))

    @classmethod
    def full(cls, n: int) -> "Lattice":
        return cls(n, IntMatrix.identity(n))

    def vectors(self) -> list[list[int]]:
        return self.basis.columns()

    def contains(self, vector: Sequence[int]) -> bool:
        """Membership test. Saturation reduces it to membership in the rational span."""
        if len(vector) != self.ambient_rank:
            raise DimensionError(f"Vector of length {len(vector)} is not in Z^{self.ambient_rank}")
        if not any(vector):
            return True
        stacked = IntMatrix.hstack(self.basis, IntMatrix.from_columns([list(vector)], nrows=self.ambient_rank))
        return stacked.rank() == self.rank

    def is_sublattice_of(self, other: "Lattice") -> bool:
        return self.ambient_rank == other.ambient_rank and all(other.contains(v) for v in self.vectors())

    def is_invariant_under(self, a: IntMatrix, k: int = 1) -> bool:
        """True when every basis vector is fixed by a^k."""
        power = a.power(k)
        return all(power.apply(v) == v for v in self.vectors())


def _canonical(ambient_rank: int, generators: IntMatrix) -> Lattice:
    h = hnf(generators).H
    r = hnf_rank(h)
    return Lattice(ambient_rank, h.submatrix(range(ambient_rank), range(r)))


def kernel_lattice(m: IntMatrix) -> Lattice:
    """The saturated lattice {v in Z^n : M·v = 0} where n = M.ncols."""
    n = m.ncols
    if n == 0:
        return Lattice.zero(0)
    form = hnf(m)
    r = hnf_rank(form.H)
    kernel = form.U.submatrix(range(n), range(r, n))
    return _canonical(n, kernel)


def saturate(generators: IntMatrix) -> Lattice:
    """Saturation of the lattice spanned by the columns of `generators`.

    Returns (rational span) ∩ Z^n, computed as the kernel of a basis of the
    orthogonal complement.
    """
    n = generators.nrows
    orthogonal = kernel_lattice(generators.transpose())
    if orthogonal.rank == 0:
        return Lattice.full(n)
    return kernel_lattice(orthogonal.basis.transpose())


def lattice_of(ambient_rank: int, vectors: Sequence[Sequence[int]]) -> Lattice:
    """Saturated lattice spanned by a list of vectors."""
    return saturate(IntMatrix.from_columns([list(v) for v in vectors], nrows=ambient_rank))


def fixed_lattice(a: IntMatrix, k: int) -> Lattice:
    """The saturated lattice ker(A^k - I)."""
    a.require_square("fixed_lattice")
    if k < 1:
        raise LinalgError(f"fixed_lattice needs k >= 1, got {k}")
    return kernel_lattice(a.power(k) - IntMatrix.identity(a.nrows))
