# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Result records of the dimension engine."""

from enum import StrEnum
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from vcyc.core.dims.citations import Citation
from vcyc.core.groups.spec import GroupSpec
from vcyc.core.linalg.fields import LatticeField


class UnsupportedGroupError(ValueError):
    """Raised when no supported rule determines the requested dimension."""


class CaseTag(StrEnum):
    POLY_Z_EMPTY = "PolyZ_Empty"
    POLY_Z_UNIQUE_LOW = "PolyZ_UniqueLow"
    POLY_Z_UNIQUE_HIGH = "PolyZ_UniqueHigh"
    POLY_Z_MANY = "PolyZ_Many"
    VIRTUALLY_ZN = "VirtuallyZn"
    LOW_DIM_LOCALLY_FINITE = "LowDim_LocallyFinite"
    LOW_DIM_LOCALLY_VC = "LowDim_LocallyVC"
    LOW_DIM_VC = "LowDim_VC"
    LOW_DIM_PROPER_LE_ONE = "LowDim_ProperLeOne"
    Z_ONE_OVER_P = "ZOneOverP"
    PRODUCT_EXACT = "ProductExact"
    PRODUCT_BOUNDS = "ProductBounds"

    @property
    def vcd_offset(self) -> int | None:
        """hdim_vcyc − vcd for the four cases of the virtually poly-Z theorem."""
        return _OFFSETS.get(self)


_OFFSETS = {
    CaseTag.POLY_Z_EMPTY: 0,
    CaseTag.POLY_Z_UNIQUE_LOW: -1,
    CaseTag.POLY_Z_UNIQUE_HIGH: 0,
    CaseTag.POLY_Z_MANY: 1,
}


class WitnessKind(StrEnum):
    FINITE_ORDER = "finite_order"
    FIXED_LATTICE = "fixed_lattice"
    CYCLOTOMIC_FREE_REMAINDER = "cyclotomic_free_remainder"
    VIRTUALLY_ABELIAN = "virtually_abelian"
    NORMAL_CYCLIC_CENTER = "normal_cyclic_center"
    CENTER_RANK = "center_rank"
    CASE_DISCRIMINATOR = "case_discriminator"


class Witness(BaseModel):
    """A checkable fact backing a case decision. `verify_witness` states the predicate per kind."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: WitnessKind
    citation: Citation
    k: int | None = Field(default=None, description="Exponent or order the witness refers to.")
    lattice: LatticeField | None = None
    polynomial: list[int] | None = Field(default=None, description="Coefficients, constant term first.")
    value: int | None = None


class Interval(BaseModel):
    model_config = ConfigDict(frozen=True)

    lo: int = Field(ge=0)
    hi: int = Field(ge=0)

    @model_validator(mode="after")
    def _ordered(self) -> Self:
        if self.lo > self.hi:
            raise ValueError(f"Interval bounds out of order: [{self.lo}, {self.hi}]")
        return self

    def __contains__(self, value: int) -> bool:
        return self.lo <= value <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


class DimReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    spec: GroupSpec
    vcd: int | None = Field(description="Virtual cohomological dimension, None outside the virtually poly-Z class.")
    hdim_fin: int = Field(ge=0, description="Minimal dimension of a model for proper actions.")
    hdim_vcyc: int | Interval = Field(description="Minimal dimension of a model for the virtually cyclic family.")
    case: CaseTag
    witnesses: list[Witness] = Field(default_factory=list)
    citations: list[Citation] = Field(default_factory=list)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.hdim_vcyc, int)

    @model_validator(mode="after")
    def _sandwich(self) -> Self:
        if self.vcd is None:
            return self
        if self.hdim_fin != self.vcd:
            raise ValueError(f"hdim_fin = {self.hdim_fin} differs from vcd = {self.vcd}")
        if isinstance(self.hdim_vcyc, int) and not self.vcd - 1 <= self.hdim_vcyc <= self.vcd + 1:
            raise ValueError(f"hdim_vcyc = {self.hdim_vcyc} is outside [vcd - 1, vcd + 1] for vcd = {self.vcd}")
        return self
