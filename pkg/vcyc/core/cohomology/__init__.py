# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Cohomology cross-checks: Wang tables, top degree and the case (3) certificate."""

from .certificates import MVCertificate, WrongCaseError, central_vectors, mv_case3_certificate, top_class
from .wang import WANG_MAX_RANK, CohomologyTable, CohomologyTooLargeError, top_cohomology, wang_cohomology

__all__ = [
    "WANG_MAX_RANK",
    "CohomologyTable",
    "CohomologyTooLargeError",
    "MVCertificate",
    "WrongCaseError",
    "central_vectors",
    "mv_case3_certificate",
    "top_class",
    "top_cohomology",
    "wang_cohomology",
]
