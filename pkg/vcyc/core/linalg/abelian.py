# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Finitely generated abelian groups in invariant-factor form."""

import itertools
import math
from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, Field, model_validator

from vcyc.core.linalg.matrix import IntMatrix
from vcyc.core.linalg.normal_forms import snf


class AbelianGroup(BaseModel):
    """Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_s with d_1 | d_2 | ... | d_s and every d_i >= 2."""

    model_config = ConfigDict(frozen=True)

    free_rank: int = Field(ge=0, description="Rank of the free part.")
    torsion: tuple[int, ...] = Field(default=(), description="Invariant factors of the torsion part.")

    @model_validator(mode="after")
    def _check_chain(self) -> "AbelianGroup":
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"Invariant factors must be >= 2, got {d}")
        for a, b in itertools.pairwise(self.torsion):
            if b % a:
                raise ValueError(f"Invariant factors must form a divisibility chain, {a} does not divide {b}")
        return self

    @classmethod
    def free(cls, rank: int) -> "AbelianGroup":
        return cls(free_rank=rank)

    @classmethod
    def cyclic(cls, order: int) -> "AbelianGroup":
        """Z/order, or Z when order is 0."""
        if order == 0:
            return cls(free_rank=1)
        return cls.from_orders(0, [order])

    @classmethod
    def from_orders(cls, free_rank: int, orders: Iterable[int]) -> "AbelianGroup":
        """Normalize an arbitrary list of cyclic orders into invariant factors."""
        orders = [abs(d) for d in orders if abs(d) != 1]
        free_rank += sum(1 for d in orders if d == 0)
        finite = [d for d in orders if d]
        if not finite:
            return cls(free_rank=free_rank)
        invariants = snf(IntMatrix.diagonal(finite)).invariants
        return cls(free_rank=free_rank, torsion=tuple(d for d in invariants if d > 1))

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_orders(self.free_rank + other.free_rank, [*self.torsion, *other.torsion])

    @property
    def order_of_torsion(self) -> int:
        return math.prod(self.torsion)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_cyclic(self) -> bool:
        return self.min_generators() <= 1

    def min_generators(self) -> int:
        return self.free_rank + len(self.torsion)

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts.insert(0, "Z")
        elif self.free_rank > 1:
            parts.insert(0, f"Z^{self.free_rank}")
        return " ⊕ ".join(parts) if parts else "0"


def cokernel(m: IntMatrix) -> AbelianGroup:
    """Z^rows / M·Z^cols classified by Smith normal form."""
    invariants = snf(m).invariants
    return AbelianGroup(
        free_rank=m.nrows - len(invariants),
        torsion=tuple(d for d in invariants if d > 1),
    )
