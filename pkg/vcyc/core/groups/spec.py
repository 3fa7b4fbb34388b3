# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
The supported group zoo as a pydantic tagged union.

Each variant carries exactly the data the dimension theorems read. The JSON
encoding uses the `tag` field as discriminator.
"""

from enum import StrEnum
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field

from vcyc.core.linalg.fields import MatrixField


class BaseSpec(BaseModel):
    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
        arbitrary_types_allowed=True,
        populate_by_name=True,
        serialize_by_alias=True,
    )


class FreeAbelian(BaseSpec):
    """Z^n."""

    tag: Literal["free_abelian"] = "free_abelian"
    n: int = Field(ge=0, description="Rank of the free abelian group.")


class ZnByZ(BaseSpec):
    """Z^n ⋊_A Z, where the generator of Z acts on Z^n by A."""

    tag: Literal["zn_by_z"] = "zn_by_z"
    n: int = Field(ge=1, description="Rank of the normal free abelian subgroup.")
    matrix: MatrixField = Field(alias="A", description="Automorphism of Z^n, images of the basis as columns.")


class Crystallographic(BaseSpec):
    """Z^n extended by a finite point group acting faithfully."""

    tag: Literal["crystallographic"] = "crystallographic"
    n: int = Field(ge=1, description="Rank of the translation lattice.")
    point_group: list[MatrixField] = Field(
        default_factory=list, description="Point-group elements (or generators) as n x n matrices."
    )


class CentralExtension(BaseSpec):
    """1 → Z^m → G → Z^n → 1 with class at most two and commutator pairing given by `form`."""

    tag: Literal["central_extension"] = "central_extension"
    m: int = Field(ge=0, description="Rank of the central kernel.")
    n: int = Field(ge=0, description="Rank of the abelian quotient.")
    form: list[MatrixField] = Field(
        default_factory=list, description="One alternating n x n matrix per central coordinate."
    )


class HeisenbergByZ(BaseSpec):
    """H ⋊_f Z with cent(H) = Z, recorded by the induced map f̄ on H/cent(H) = Z^n and the sign on the center."""

    tag: Literal["heisenberg_by_z"] = "heisenberg_by_z"
    n: int = Field(ge=1, description="Rank of H/cent(H).")
    form: MatrixField = Field(description="Alternating commutator form of H.")
    f_bar: MatrixField = Field(description="Induced automorphism of Z^n.")
    epsilon: Literal[1, -1] = Field(description="Action of f on cent(H) = Z.")


class ZOneOverP(BaseSpec):
    """The additive group Z[1/p]."""

    tag: Literal["z_one_over_p"] = "z_one_over_p"
    p: int = Field(ge=2, description="A prime.")


class LocalKind(StrEnum):
    LOCALLY_FINITE = "locally_finite"
    LOCALLY_VIRTUALLY_CYCLIC = "locally_virtually_cyclic"
    PROPER_DIM_LE_ONE = "proper_dim_le_one"


class CountableLocal(BaseSpec):
    """A countable group known only through the flags the low-dimension theorem reads."""

    tag: Literal["countable_local"] = "countable_local"
    kind: LocalKind
    infinite: bool
    virtually_cyclic: bool = False
    locally_virtually_cyclic: bool = Field(
        default=False,
        description="Only read for kind 'proper_dim_le_one'; implied by the other kinds.",
    )


class Product(BaseSpec):
    """Direct product of two supported groups."""

    tag: Literal["product"] = "product"
    left: "GroupSpec"
    right: "GroupSpec"


GroupSpec = Annotated[
    FreeAbelian | ZnByZ | Crystallographic | CentralExtension | HeisenbergByZ | ZOneOverP | CountableLocal | Product,
    Field(discriminator="tag"),
]

Product.model_rebuild()

POLY_Z_VARIANTS = (FreeAbelian, ZnByZ, Crystallographic, CentralExtension, HeisenbergByZ)


def is_virtually_poly_z(g: GroupSpec) -> bool:
    if isinstance(g, Product):
        return is_virtually_poly_z(g.left) and is_virtually_poly_z(g.right)
    return isinstance(g, POLY_Z_VARIANTS)


def describe(g: GroupSpec) -> str:
    """Short human-readable name used in logs and markdown output."""
    match g:
        case FreeAbelian(n=n):
            return f"Z^{n}"
        case ZnByZ(n=n):
            return f"Z^{n} ⋊_A Z"
        case Crystallographic(n=n):
            return f"crystallographic(n={n})"
        case CentralExtension(m=m, n=n):
            return f"central extension(m={m}, n={n})"
        case HeisenbergByZ(n=n):
            return f"H ⋊_f Z (n={n})"
        case ZOneOverP(p=p):
            return f"Z[1/{p}]"
        case CountableLocal(kind=kind):
            return f"countable {kind.value}"
        case Product(left=left, right=right):
            return f"({describe(left)}) × ({describe(right)})"
    return type(g).__name__
