# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Tests for dimensions of product groups"""

import pytest

from vcyc.core.dims.engine import compute_report
from vcyc.core.dims.products import product_dims
from vcyc.core.dims.report import CaseTag, Interval, UnsupportedGroupError
from vcyc.core.groups.spec import FreeAbelian, GroupSpec, Product, ZOneOverP
from vcyc.core.groups.tests.samples import G_MINUS_ONE, G_ONE, HYPERBOLIC, Z, zn_by_z


class TestProductDims:
    """Test cases for product_dims"""

    def test_z_times_z(self) -> None:
        report = product_dims(compute_report(Z), compute_report(Z))
        assert report.hdim_vcyc == 3
        assert report.case is CaseTag.PRODUCT_EXACT
        assert report.spec == Product(left=Z, right=Z)

    def test_heisenberg_square(self) -> None:
        report = product_dims(compute_report(G_MINUS_ONE), compute_report(G_MINUS_ONE))
        assert report.vcd == 8
        assert report.hdim_fin == 8
        assert report.hdim_vcyc == 9
        assert report.case is CaseTag.POLY_Z_MANY

    def test_hyperbolic_pair_has_finite_centers(self) -> None:
        hyperbolic = compute_report(zn_by_z(HYPERBOLIC))
        report = product_dims(hyperbolic, hyperbolic)
        assert report.hdim_vcyc == report.vcd == 6
        assert report.case is CaseTag.POLY_Z_EMPTY
        assert report.is_exact

    def test_many_factor_forces_many(self) -> None:
        report = product_dims(compute_report(G_ONE), compute_report(zn_by_z(HYPERBOLIC)))
        assert report.hdim_vcyc == 4 + 3 + 1

    def test_mixed_bounds(self) -> None:
        report = product_dims(compute_report(G_MINUS_ONE), compute_report(zn_by_z(HYPERBOLIC)))
        assert report.hdim_vcyc == Interval(lo=6, hi=8)
        assert report.case is CaseTag.PRODUCT_BOUNDS
        assert not report.is_exact

    @pytest.mark.parametrize(
        "left,right", [(G_MINUS_ONE, zn_by_z(HYPERBOLIC)), (zn_by_z(HYPERBOLIC), G_MINUS_ONE)]
    )
    def test_bounds_stay_inside_sandwich(self, left: GroupSpec, right: GroupSpec) -> None:
        report = product_dims(compute_report(left), compute_report(right))
        assert report.vcd is not None
        assert isinstance(report.hdim_vcyc, Interval)
        assert report.vcd - 1 <= report.hdim_vcyc.lo
        assert report.hdim_vcyc.hi <= report.vcd + 1

    def test_compute_report_on_product_spec(self) -> None:
        report = compute_report(Product(left=FreeAbelian(n=2), right=FreeAbelian(n=1)))
        assert (report.hdim_fin, report.hdim_vcyc) == (3, 4)

    def test_non_poly_z_factor(self) -> None:
        with pytest.raises(UnsupportedGroupError):
            product_dims(compute_report(ZOneOverP(p=2)), compute_report(Z))

    def test_interval_factor(self) -> None:
        hyperbolic = compute_report(zn_by_z(HYPERBOLIC))
        bounded = product_dims(compute_report(G_MINUS_ONE), hyperbolic)
        with pytest.raises(UnsupportedGroupError):
            product_dims(bounded, hyperbolic)
