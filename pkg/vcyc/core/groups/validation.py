# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Validation of group specs against the hypotheses of the dimension theorems.

`validate_spec` never raises on a structurally valid spec: every problem is
reported as a violation with a stable rule id. Operations that need a valid
spec call `require_valid`, which raises `InvalidSpecError`.
"""

import logging

import sympy
from pydantic import BaseModel, ConfigDict, Field, computed_field

from vcyc.core.groups.spec import (
    CentralExtension,
    CountableLocal,
    Crystallographic,
    FreeAbelian,
    GroupSpec,
    HeisenbergByZ,
    LocalKind,
    Product,
    ZnByZ,
    ZOneOverP,
    is_virtually_poly_z,
)
from vcyc.core.linalg.lattice import kernel_lattice
from vcyc.core.linalg.matrix import IntMatrix
from vcyc.core.linalg.spectra import matrix_order

logger = logging.getLogger(__name__)

MAX_DIMENSION = 12
MAX_POINT_GROUP_ORDER = 10_000


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    rule: str = Field(description="Stable rule id, e.g. 'zn_by_z.not_unimodular'.")
    message: str = Field(description="Human-readable explanation.")


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    violations: list[Violation] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def ok(self) -> bool:
        return not self.violations


class InvalidSpecError(ValueError):
    """Raised when an operation receives a spec that fails validation."""

    def __init__(self, report: ValidationReport) -> None:
        self.report = report
        summary = "; ".join(f"{v.rule}: {v.message}" for v in report.violations)
        super().__init__(f"Invalid group spec: {summary}")


def _is_alternating(m: IntMatrix) -> bool:
    return m.is_square and m.transpose() == -m


def _check_square(violations: list[Violation], rule: str, name: str, m: IntMatrix, n: int) -> bool:
    if m.shape != (n, n):
        message = f"{name} must be {n}x{n}, got {m.nrows}x{m.ncols}"
        violations.append(Violation(rule=f"{rule}.dimension", message=message))
        return False
    return True


def _check_size(violations: list[Violation], rule: str, n: int) -> bool:
    if n > MAX_DIMENSION:
        violations.append(
            Violation(rule=f"{rule}.too_large", message=f"Rank {n} exceeds the supported maximum {MAX_DIMENSION}")
        )
        return False
    return True


def _radical_rank(forms: list[IntMatrix], n: int) -> int:
    if not forms:
        return n
    return kernel_lattice(IntMatrix.vstack(*forms)).rank


def _validate_zn_by_z(g: ZnByZ, violations: list[Violation]) -> None:
    if not _check_size(violations, "zn_by_z", g.n) or not _check_square(violations, "zn_by_z", "A", g.matrix, g.n):
        return
    det = g.matrix.det()
    if abs(det) != 1:
        violations.append(Violation(rule="zn_by_z.not_unimodular", message=f"|det A| must be 1, got det = {det}"))


def _point_group_closure(elements: list[IntMatrix], n: int) -> int | None:
    """Order of the group generated by `elements`, or None past the cap."""
    identity = IntMatrix.identity(n)
    seen = {identity}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for x in frontier:
            for g in elements:
                y = x @ g
                if y not in seen:
                    seen.add(y)
                    if len(seen) > MAX_POINT_GROUP_ORDER:
                        return None
                    next_frontier.append(y)
        frontier = next_frontier
    return len(seen)


def _validate_crystallographic(g: Crystallographic, violations: list[Violation]) -> None:
    if not _check_size(violations, "crystallographic", g.n):
        return
    usable = True
    for index, element in enumerate(g.point_group):
        if not _check_square(violations, "crystallographic", f"point_group[{index}]", element, g.n):
            usable = False
            continue
        det = element.det()
        if abs(det) != 1:
            violations.append(
                Violation(
                    rule="crystallographic.not_unimodular",
                    message=f"point_group[{index}] has det = {det}, expected ±1",
                )
            )
            usable = False
        elif matrix_order(element) is None:
            violations.append(
                Violation(rule="crystallographic.infinite_order", message=f"point_group[{index}] has infinite order")
            )
            usable = False
    if not usable:
        return
    order = _point_group_closure(list(g.point_group), g.n)
    if order is None:
        violations.append(
            Violation(
                rule="crystallographic.not_finite",
                message=f"The point group generated by the given matrices exceeds {MAX_POINT_GROUP_ORDER} elements",
            )
        )
    else:
        logger.debug(f"Crystallographic point group has order {order}")


def _validate_central_extension(g: CentralExtension, violations: list[Violation]) -> None:
    """
    Rank checks for the commutator forms of 1 → Z^m → G → Z^n → 1.

    With m = 1 and n odd the form always has a radical of rank at least one, so
    the smallest radical is accepted. The result depends on the presentation:
    a form ω ⊕ 0 on Z^3 describes Hei × Z, whose Product presentation has a Z^2
    center and one more dimension. Verify reports such entries as a warning.
    """
    if not _check_size(violations, "central_extension", g.m + g.n):
        return
    if len(g.form) != g.m:
        violations.append(
            Violation(
                rule="central_extension.form_count",
                message=f"Expected one commutator form per central coordinate ({g.m}), got {len(g.form)}",
            )
        )
        return
    for index, form in enumerate(g.form):
        if not _check_square(violations, "central_extension", f"form[{index}]", form, g.n):
            return
        if not _is_alternating(form):
            violations.append(
                Violation(rule="central_extension.not_alternating", message=f"form[{index}] is not alternating")
            )
            return
    if g.m == 0 or g.n == 0:
        return
    radical = _radical_rank(list(g.form), g.n)
    if g.m == 1 and g.n == 1:
        violations.append(
            Violation(
                rule="central_extension.abelian",
                message="With m = n = 1 the group is Z^2; use free_abelian instead",
            )
        )
    elif g.m == 1 and radical > g.n % 2:
        # An alternating form on an odd-rank lattice always has a radical of rank at least one.
        violations.append(
            Violation(
                rule="central_extension.radical_nontrivial",
                message=f"radical nontrivial: cent(G) ≠ Z^m (radical rank {radical})",
            )
        )


def _validate_heisenberg_by_z(g: HeisenbergByZ, violations: list[Violation]) -> None:
    if g.n < 2:
        violations.append(Violation(rule="heisenberg_by_z.rank_too_small", message=f"n must be at least 2, got {g.n}"))
        return
    if not _check_size(violations, "heisenberg_by_z", g.n):
        return
    form_ok = _check_square(violations, "heisenberg_by_z", "form", g.form, g.n)
    f_ok = _check_square(violations, "heisenberg_by_z", "f_bar", g.f_bar, g.n)
    if not (form_ok and f_ok):
        return
    if not _is_alternating(g.form):
        violations.append(Violation(rule="heisenberg_by_z.not_alternating", message="form is not alternating"))
        return
    radical = _radical_rank([g.form], g.n)
    if radical:
        violations.append(
            Violation(
                rule="heisenberg_by_z.radical_nontrivial",
                message=f"radical nontrivial: cent(H) ≠ Z (radical rank {radical})",
            )
        )
    det = g.f_bar.det()
    if abs(det) != 1:
        violations.append(Violation(rule="heisenberg_by_z.not_unimodular", message=f"|det f_bar| must be 1, got {det}"))
        return
    if g.f_bar.transpose() @ g.form @ g.f_bar != g.form.scale(g.epsilon):
        violations.append(
            Violation(
                rule="heisenberg_by_z.incompatible",
                message=f"f_barᵀ·form·f_bar must equal {g.epsilon}·form",
            )
        )


def _validate_countable_local(g: CountableLocal, violations: list[Violation]) -> None:
    if g.kind is LocalKind.LOCALLY_FINITE and g.virtually_cyclic and g.infinite:
        violations.append(
            Violation(
                rule="countable_local.inconsistent",
                message="An infinite locally finite group cannot be virtually cyclic",
            )
        )
    if g.kind is LocalKind.PROPER_DIM_LE_ONE and g.virtually_cyclic and not g.locally_virtually_cyclic:
        violations.append(
            Violation(
                rule="countable_local.inconsistent",
                message="A virtually cyclic group is locally virtually cyclic",
            )
        )


def _validate_product(g: Product, violations: list[Violation]) -> None:
    for side, factor in (("left", g.left), ("right", g.right)):
        for violation in validate_spec(factor).violations:
            violations.append(Violation(rule=f"product.{side}.{violation.rule}", message=violation.message))
        if not is_virtually_poly_z(factor):
            violations.append(
                Violation(
                    rule="product.not_poly_z",
                    message=f"The {side} factor is not virtually poly-Z; no product rule applies",
                )
            )


def validate_spec(g: GroupSpec) -> ValidationReport:
    """Check every invariant of a group spec and collect the violations."""
    violations: list[Violation] = []
    match g:
        case FreeAbelian():
            _check_size(violations, "free_abelian", g.n)
        case ZnByZ():
            _validate_zn_by_z(g, violations)
        case Crystallographic():
            _validate_crystallographic(g, violations)
        case CentralExtension():
            _validate_central_extension(g, violations)
        case HeisenbergByZ():
            _validate_heisenberg_by_z(g, violations)
        case ZOneOverP():
            if not sympy.isprime(g.p):
                violations.append(Violation(rule="z_one_over_p.not_prime", message=f"p = {g.p} is not prime"))
        case CountableLocal():
            _validate_countable_local(g, violations)
        case Product():
            _validate_product(g, violations)
    return ValidationReport(violations=violations)


def normalize_spec(g: GroupSpec) -> GroupSpec:
    """Rewrite degenerate variants into their canonical form.

    A central extension with m = 0 or n = 0 is free abelian of rank m + n.
    """
    match g:
        case CentralExtension(m=m, n=n) if m == 0 or n == 0:
            return FreeAbelian(n=m + n)
        case Product(left=left, right=right):
            return Product(left=normalize_spec(left), right=normalize_spec(right))
    return g


def require_valid(g: GroupSpec) -> GroupSpec:
    """Validate and normalize, raising InvalidSpecError on any violation."""
    report = validate_spec(g)
    if not report.ok:
        raise InvalidSpecError(report)
    return normalize_spec(g)
