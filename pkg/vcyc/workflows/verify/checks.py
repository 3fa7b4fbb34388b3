# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Cross-checks run by `vcyc verify` on a single entry.

Each check compares a value the engine derives from a closed-form rule with
an independent computation: brute-force powering, an equivalent presentation
of the same group, a finite-index subgroup, or the Wang sequence.
"""

import logging
from collections.abc import Callable

from vcyc.core.cohomology.wang import CohomologyTooLargeError, top_cohomology, wang_cohomology
from vcyc.core.dims.engine import compute_report, verify_witness
from vcyc.core.dims.report import DimReport, Interval, UnsupportedGroupError
from vcyc.core.groups.spec import CentralExtension, Crystallographic, GroupSpec, HeisenbergByZ, Product, ZnByZ
from vcyc.core.groups.validation import InvalidSpecError
from vcyc.core.linalg import spectra
from vcyc.core.linalg.lattice import kernel_lattice
from vcyc.core.linalg.matrix import IntMatrix
from vcyc.core.linalg.oracles import brute_force_max_fixed_rank, brute_force_order, default_oracle_depth
from vcyc.inputs.spec_document import NamedSpec
from vcyc.outputs.report import CheckResult, CheckStatus
from vcyc.workflows.cohomology.workflow import mapping_torus

logger = logging.getLogger(__name__)


def _passed(name: str, check: str, detail: str = "") -> CheckResult:
    return CheckResult(name=name, check=check, status=CheckStatus.PASSED, detail=detail)


def _failed(name: str, check: str, detail: str) -> CheckResult:
    return CheckResult(name=name, check=check, status=CheckStatus.FAILED, detail=detail)


def _outcome(name: str, check: str, ok: bool, detail: str) -> CheckResult:
    return _passed(name, check, detail) if ok else _failed(name, check, detail)


def automorphisms(g: GroupSpec) -> list[IntMatrix]:
    """Every integer matrix whose spectral invariants the engine relies on."""
    match g:
        case ZnByZ(matrix=a):
            return [a]
        case HeisenbergByZ(f_bar=f_bar):
            return [f_bar]
        case Crystallographic(point_group=point_group):
            return list(point_group)
        case Product(left=left, right=right):
            return automorphisms(left) + automorphisms(right)
    return []


def check_order_oracle(name: str, a: IntMatrix, depth: int) -> CheckResult:
    check = "oracle.matrix_order"
    engine = spectra.matrix_order(a)
    oracle = brute_force_order(a, depth)
    if engine == oracle:
        return _passed(name, check, f"order {engine if engine is not None else 'infinite'}")
    if oracle is None and engine is not None and engine > depth:
        return CheckResult(
            name=name,
            check=check,
            status=CheckStatus.WARNING,
            detail=f"depth insufficient: order {engine} exceeds oracle depth {depth}",
        )
    return _failed(name, check, f"engine order {engine}, oracle order {oracle} at depth {depth}")


def check_fixed_rank_oracle(name: str, a: IntMatrix, depth: int) -> CheckResult:
    check = "oracle.max_fixed_rank"
    engine = spectra.max_fixed_rank(a)
    oracle = brute_force_max_fixed_rank(a, depth)
    if engine.rank == oracle.rank:
        return _passed(name, check, f"rank {engine.rank}")
    if oracle.rank < engine.rank and engine.k_star > depth:
        return CheckResult(
            name=name,
            check=check,
            status=CheckStatus.WARNING,
            detail=f"depth insufficient: rank {engine.rank} is reached at k = {engine.k_star} > {depth}",
        )
    return _failed(name, check, f"engine rank {engine.rank} at k = {engine.k_star}, oracle rank {oracle.rank}")


def check_sandwich(name: str, report: DimReport) -> list[CheckResult]:
    if report.vcd is None:
        return []
    vcd = report.vcd
    value = report.hdim_vcyc
    if isinstance(value, int):
        results = [_outcome(name, "sandwich", vcd - 1 <= value <= vcd + 1, f"vcd {vcd}, hdim_vcyc {value}")]
        offset = report.case.vcd_offset
        if offset is not None:
            results.append(
                _outcome(name, "sandwich.offset", value - vcd == offset, f"{report.case} expects offset {offset}")
            )
        return results
    ok = vcd - 1 <= value.lo and value.hi <= vcd + 1
    detail = f"vcd {vcd}, bounds [{value.lo}, {value.hi}] must lie in [{vcd - 1}, {vcd + 1}]"
    return [_outcome(name, "sandwich", ok, detail)]


def check_lower_bound(name: str, report: DimReport) -> list[CheckResult]:
    if not isinstance(report.hdim_vcyc, int):
        return []
    ok = report.hdim_fin <= 1 + report.hdim_vcyc
    return [_outcome(name, "lower_bound", ok, f"hdim_fin {report.hdim_fin}, hdim_vcyc {report.hdim_vcyc}")]


def check_witnesses(name: str, report: DimReport) -> list[CheckResult]:
    if not report.witnesses:
        return []
    bad = [w.kind for w in report.witnesses if not verify_witness(report.spec, w)]
    if bad:
        return [_failed(name, "witness.replay", f"rejected: {', '.join(bad)}")]
    return [_passed(name, "witness.replay", f"{len(report.witnesses)} witnesses")]


def _dims(report: DimReport) -> tuple[int | None, int, int | Interval]:
    return report.vcd, report.hdim_fin, report.hdim_vcyc


def squared(g: GroupSpec) -> GroupSpec | None:
    """The index-two subgroup generated by the normal subgroup and the square of the stable letter."""
    match g:
        case ZnByZ(n=n, matrix=a):
            return ZnByZ(n=n, matrix=a @ a)
        case HeisenbergByZ(n=n, form=form, f_bar=f_bar):
            return HeisenbergByZ(n=n, form=form, f_bar=f_bar @ f_bar, epsilon=1)
    return None


def check_finite_index(name: str, report: DimReport) -> list[CheckResult]:
    subgroup = squared(report.spec)
    if subgroup is None:
        return []
    other = compute_report(subgroup)
    ok = _dims(other) == _dims(report)
    detail = f"{report.hdim_fin}/{report.hdim_vcyc} vs {other.hdim_fin}/{other.hdim_vcyc} after squaring"
    return [_outcome(name, "finite_index", ok, detail)]


def dual_representation(g: GroupSpec) -> GroupSpec | None:
    """The same group written as a different variant, where one is known."""
    match g:
        case CentralExtension(m=1, n=2, form=[form]):
            # ⟨u, v, z | [u, v] = z^c⟩ is Z^2 = ⟨z, v⟩ extended by u.
            return ZnByZ(n=2, matrix=IntMatrix.from_rows([[1, form[0, 1]], [0, 1]]))
        case HeisenbergByZ(n=n, form=form, f_bar=f_bar, epsilon=1) if n % 2 == 0 and f_bar.is_identity():
            # H × Z, with center Z^2 spanned by z and the stable letter.
            return CentralExtension(m=2, n=n, form=[form, IntMatrix.zeros(n, n)])
    return None


def check_dual_representation(name: str, report: DimReport) -> list[CheckResult]:
    dual = dual_representation(report.spec)
    if dual is None:
        return []
    other = compute_report(dual)
    ok = _dims(other) == _dims(report)
    detail = f"{report.spec.tag} {_dims(report)} vs {dual.tag} {_dims(other)}"
    return [_outcome(name, "dual_representation", ok, detail)]


def check_central_radical(name: str, report: DimReport) -> list[CheckResult]:
    """
    Flag m = 1 central extensions whose commutator form has a radical.

    The radical is central, so the center has rank 1 + r rather than 1 and the
    group splits as a nondegenerate extension times Z^r. Written that way it
    has a Z^2 center and dimension vcd + 1, while the m = 1 rule gives vcd.
    """
    g = report.spec
    if not isinstance(g, CentralExtension) or g.m != 1:
        return []
    radical = kernel_lattice(IntMatrix.vstack(*g.form)).rank
    if not radical:
        return []
    detail = (
        f"radical of rank {radical} makes the center Z^{g.m + radical}; "
        f"the split presentation gives hdim_vcyc {(report.vcd or 0) + 1}, this entry reports {report.hdim_vcyc}"
    )
    return [CheckResult(name=name, check="central_radical", status=CheckStatus.WARNING, detail=detail)]


def check_wang(name: str, report: DimReport) -> list[CheckResult]:
    torus = mapping_torus(report.spec)
    if torus is None:
        return []
    n, a = torus
    try:
        table = wang_cohomology(n, a)
    except CohomologyTooLargeError as e:
        return [CheckResult(name=name, check="wang", status=CheckStatus.WARNING, detail=f"not computed: {e}")]
    top = top_cohomology(n, a)
    return [
        _outcome(name, "wang.euler", table.euler_characteristic() == 0, f"χ = {table.euler_characteristic()}"),
        _outcome(name, "wang.top_degree", table.top == top, f"H^{n + 1} = {table.top}, expected {top}"),
    ]


_REPORT_CHECKS: list[Callable[[str, DimReport], list[CheckResult]]] = [
    check_sandwich,
    check_lower_bound,
    check_witnesses,
    check_finite_index,
    check_dual_representation,
    check_central_radical,
    check_wang,
]


def oracle_depth_used(entries: list[NamedSpec], oracle_depth: int | None = None) -> int | None:
    """The largest oracle depth `run_checks` applies to these entries, None when no oracle runs."""
    sizes = [a.nrows for entry in entries for a in automorphisms(entry.spec)]
    if not sizes:
        return None
    return oracle_depth or max(default_oracle_depth(n) for n in sizes)


def run_checks(entry: NamedSpec, oracle_depth: int | None = None) -> list[CheckResult]:
    """
    Every applicable check for one entry.

    Specs that fail validation or fall outside every supported rule raise.
    Any other exception from the engine is reported as a failed check.
    """
    name = entry.name
    results: list[CheckResult] = []

    for a in automorphisms(entry.spec):
        depth = oracle_depth or default_oracle_depth(a.nrows)
        for oracle_check in (check_order_oracle, check_fixed_rank_oracle):
            try:
                results.append(oracle_check(name, a, depth))
            except Exception as e:
                results.append(_failed(name, "oracle.error", f"{type(e).__name__}: {e}"))

    try:
        report = compute_report(entry.spec)
    except (UnsupportedGroupError, InvalidSpecError):
        raise
    except Exception as e:
        return [*results, _failed(name, "engine.report", f"{type(e).__name__}: {e}")]

    for report_check in _REPORT_CHECKS:
        try:
            results.extend(report_check(name, report))
        except Exception as e:
            results.append(_failed(name, report_check.__name__.removeprefix("check_"), f"{type(e).__name__}: {e}"))

    failed = sum(r.status is CheckStatus.FAILED for r in results)
    logger.debug(f"{name}: {len(results)} checks, {failed} failed")
    return results
