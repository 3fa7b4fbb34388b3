# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Tests for the case (3) Mayer-Vietoris certificate"""

import pytest
from pydantic import ValidationError

from vcyc.core.cohomology.certificates import MVCertificate, WrongCaseError, central_vectors, mv_case3_certificate
from vcyc.core.groups.spec import FreeAbelian, GroupSpec, Product, ZnByZ
from vcyc.core.groups.tests.samples import G_MINUS_ONE, G_ONE, HYPERBOLIC, UNIPOTENT, central_extension, zn_by_z
from vcyc.core.linalg.abelian import AbelianGroup
from vcyc.core.linalg.lattice import Lattice, lattice_of
from vcyc.core.linalg.matrix import IntMatrix


def axis(n: int, i: int) -> Lattice:
    return lattice_of(n, [[int(j == i) for j in range(n)]])


class TestMVCase3Certificate:
    """Test cases for mv_case3_certificate"""

    def test_free_abelian_rank_two(self) -> None:
        certificate = mv_case3_certificate(FreeAbelian(n=2))
        assert certificate.degree == 2
        assert certificate.source_group == AbelianGroup.free(1)
        assert certificate.target_count == 2
        assert certificate.witnesses == [axis(2, 0), axis(2, 1)]
        assert certificate.conclusion == "nonvanishing in degree 3"
        assert certificate.non_surjective

    def test_three_torus(self) -> None:
        certificate = mv_case3_certificate(zn_by_z(IntMatrix.identity(2)))
        assert certificate.degree == 3
        assert certificate.witnesses == [axis(3, 0), axis(3, 1)]

    def test_heisenberg_periodic(self) -> None:
        certificate = mv_case3_certificate(G_ONE)
        assert certificate.degree == 4
        # The center z and the stable letter t.
        assert certificate.witnesses == [axis(4, 2), axis(4, 3)]
        assert certificate.conclusion == "nonvanishing in degree 5"

    def test_klein_bottle_source_is_z2(self) -> None:
        certificate = mv_case3_certificate(ZnByZ(n=1, matrix=IntMatrix.from_rows([[-1]])))
        assert certificate.source_group == AbelianGroup.cyclic(2)
        assert certificate.target_group == AbelianGroup(free_rank=0, torsion=(2, 2))
        assert certificate.non_surjective

    def test_heisenberg_square(self) -> None:
        certificate = mv_case3_certificate(Product(left=G_MINUS_ONE, right=G_MINUS_ONE))
        assert certificate.degree == 8
        assert certificate.witnesses == [axis(8, 2), axis(8, 6)]

    def test_fixed_lattice_directions(self) -> None:
        a = IntMatrix.block_diag(HYPERBOLIC, IntMatrix.identity(2))
        certificate = mv_case3_certificate(zn_by_z(a))
        assert certificate.witnesses == [axis(5, 2), axis(5, 3)]

    def test_central_extension(self) -> None:
        certificate = mv_case3_certificate(central_extension(2, 2))
        assert certificate.witnesses == [axis(4, 0), axis(4, 1)]

    @pytest.mark.parametrize("g", [zn_by_z(HYPERBOLIC), zn_by_z(UNIPOTENT), G_MINUS_ONE, FreeAbelian(n=1)])
    def test_wrong_case(self, g: GroupSpec) -> None:
        with pytest.raises(WrongCaseError):
            mv_case3_certificate(g)


class TestMVCertificate:
    """Test cases for the certificate record"""

    def test_rejects_repeated_class(self) -> None:
        with pytest.raises(ValidationError):
            MVCertificate(
                degree=2,
                source_group=AbelianGroup.free(1),
                target_group=AbelianGroup.free(2),
                target_count=2,
                witnesses=[axis(2, 0), axis(2, 0)],
                conclusion="nonvanishing in degree 3",
            )

    def test_rejects_single_class(self) -> None:
        with pytest.raises(ValidationError):
            MVCertificate(
                degree=2,
                source_group=AbelianGroup.free(1),
                target_group=AbelianGroup.free(1),
                target_count=1,
                witnesses=[axis(2, 0)],
                conclusion="nonvanishing in degree 3",
            )

    def test_central_vectors_of_non_central_group(self) -> None:
        assert central_vectors(zn_by_z(HYPERBOLIC)) == []
