"""Verification suites: every identity checked at a configurable order."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import comb, factorial
from typing import Callable, Dict, List, Optional, Union

from .algebra import inverse, is_identity, multiply
from .base import SequenceKind, TriangleKind, base_triangle, lah_closed, sequence
from .composites import (
    ABSORPTION_PAIRS, CLOSED_FORM_PAIRS, INVERSE_PAIRS, ROW_SUM_PAIRS,
    PairKind, absorption_residual, closed_form, composite_product,
    composite_recurrence, inverse_pair, row_sum_target,
)
from .config import Config, default_config
from .errors import ConsistencyError, OracleLimitError
from .oracles import StructureKind, oracle_count, wrook_placements
from .polybasis import (
    BASIS_CHANGES, BasisFamily, change_matrix, expected_change_matrix,
    family_member, from_falling_basis, to_falling_basis,
)
from .triangle import Triangle, identity_triangle, sign_twist, truncate
from .utils import falling_factorial, rising_factorial

logger = logging.getLogger(__name__)


class Status(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class CheckResult:
    """One line of the check report."""
    suite: str
    identity: str
    status: Status
    detail: str = ""


@dataclass
class SuiteOptions:
    """Orders for the suites; max_n overrides every suite's default."""
    config: Config = field(default_factory=lambda: default_config)
    max_n: Optional[int] = None
    oracle_max_n: Optional[int] = None

    def order(self, default: int) -> int:
        return default if self.max_n is None else self.max_n

    def oracle_order(self, limit: int) -> int:
        """Largest n to enumerate: oracle_max_n if set, else limit capped by max_n."""
        if self.oracle_max_n is not None:
            return self.oracle_max_n
        return limit if self.max_n is None else min(limit, self.max_n)


def _outcome(suite: str, identity: str, failures: List[str]) -> CheckResult:
    if failures:
        shown = "; ".join(failures[:3])
        more = f" (+{len(failures) - 3} more)" if len(failures) > 3 else ""
        return CheckResult(suite, identity, Status.FAIL, shown + more)
    return CheckResult(suite, identity, Status.PASS)


def _differences(actual: Triangle, expected: Triangle) -> List[str]:
    if actual.order != expected.order:
        return [f"order {actual.order} != {expected.order}"]
    return [
        f"({n},{m}): {a} != {e}"
        for n, (row_a, row_e) in enumerate(zip(actual.rows, expected.rows))
        for m, (a, e) in enumerate(zip(row_a, row_e))
        if a != e
    ]


def check_closed_forms(options: SuiteOptions) -> List[CheckResult]:
    last = options.order(options.config.closed_form_max_n)
    results = []
    for pair in CLOSED_FORM_PAIRS:
        product = composite_product(pair, last)
        failures = [
            f"({n},{m}): {closed_form(pair, n, m)} != {product.entry(n, m)}"
            for n in range(last + 1)
            for m in range(n + 1)
            if closed_form(pair, n, m) != product.entry(n, m)
        ]
        results.append(_outcome("closed-forms", f"{pair.label} closed form", failures))
    lah = base_triangle(TriangleKind.LAH, last)
    failures = [
        f"({n},{m})" for n in range(last + 1) for m in range(n + 1)
        if lah_closed(n, m) != lah.entry(n, m)
    ]
    results.append(_outcome("closed-forms", "Lah recurrence = n!/m! C(n-1,m-1)", failures))
    return results


def check_recurrences(options: SuiteOptions) -> List[CheckResult]:
    last = options.order(options.config.recurrence_max_n)
    results = []
    for pair in PairKind:
        try:
            failures = _differences(
                composite_recurrence(pair, last), composite_product(pair, last)
            )
        except ConsistencyError as e:
            failures = [str(e)]
        results.append(_outcome("recurrences", f"{pair.label} recurrence = product", failures))
    return results


def check_inverses(options: SuiteOptions) -> List[CheckResult]:
    last = options.order(options.config.inverse_max_n)
    results = []
    base = {kind: base_triangle(kind, last) for kind in TriangleKind}
    partners = {
        TriangleKind.BINOMIAL: TriangleKind.BINOMIAL,
        TriangleKind.STIRLING1: TriangleKind.STIRLING2,
        TriangleKind.STIRLING2: TriangleKind.STIRLING1,
        TriangleKind.LAH: TriangleKind.LAH,
    }
    for kind, partner in partners.items():
        failures = _differences(inverse(base[kind]), sign_twist(base[partner]))
        results.append(_outcome(
            "inverses", f"{kind.symbol}^-1 = {partner.symbol}^sigma", failures
        ))
    for pair in INVERSE_PAIRS:
        partner = inverse_pair(pair).partner
        a = composite_product(pair, last)
        b = sign_twist(composite_product(partner, last))
        failures = []
        if not is_identity(multiply(a, b)):
            failures.append("A . B^sigma != I")
        if not is_identity(multiply(b, a)):
            failures.append("B^sigma . A != I")
        results.append(_outcome(
            "inverses", f"{pair.label}^-1 = {partner.label}^sigma", failures
        ))
    failures = []
    for a_kind in TriangleKind:
        for b_kind in TriangleKind:
            a, b = base[a_kind], base[b_kind]
            label = f"({a_kind.symbol},{b_kind.symbol})"
            product = multiply(a, b)
            if inverse(product) != multiply(inverse(b), inverse(a)):
                failures.append(f"{label} inverse")
            if sign_twist(product) != multiply(sign_twist(a), sign_twist(b)):
                failures.append(f"{label} sign twist")
    results.append(_outcome(
        "inverses", "(AB)^-1 = B^-1 A^-1 and (AB)^sigma = A^sigma B^sigma", failures
    ))
    return results


def check_row_sums(options: SuiteOptions) -> List[CheckResult]:
    last = options.order(options.config.row_sum_max_n)
    results = []
    expected_base = {
        SequenceKind.POWER2: [2 ** n for n in range(last + 1)],
        SequenceKind.FACTORIAL: [factorial(n) for n in range(last + 1)],
        SequenceKind.POWER3: [3 ** n for n in range(last + 1)],
        SequenceKind.LAH_TOTAL: [
            sum(lah_closed(n, m) for m in range(n + 1)) for n in range(last + 1)
        ],
    }
    for kind, expected in expected_base.items():
        actual = sequence(kind, last)
        failures = [f"n={n}" for n in range(last + 1) if actual[n] != expected[n]]
        results.append(_outcome("row-sums", f"{kind.value} sequence", failures))
    for pair in ROW_SUM_PAIRS:
        sums = composite_product(pair, last).row_sums()
        failures = [
            f"n={n}: {sums[n]} != {row_sum_target(pair, n)}"
            for n in range(last + 1)
            if sums[n] != row_sum_target(pair, n)
        ]
        results.append(_outcome("row-sums", f"{pair.label} row sums", failures))
    return results


def check_bases(options: SuiteOptions) -> List[CheckResult]:
    last = options.order(options.config.basis_max_n)
    results = []
    for family, target in BASIS_CHANGES:
        failures = _differences(
            change_matrix(family, target, last),
            expected_change_matrix(family, target, last),
        )
        results.append(_outcome(
            "bases", f"{family.value} -> {target.value} change matrix", failures
        ))
    failures = [
        f"{family.value} n={n}"
        for family in BasisFamily
        for n in range(last + 1)
        if from_falling_basis(to_falling_basis(family_member(family, n)))
        != family_member(family, n)
    ]
    results.append(_outcome("bases", "falling-basis round trip", failures))
    forward = change_matrix(BasisFamily.POWER, BasisFamily.FALLING, last)
    backward = sign_twist(base_triangle(TriangleKind.STIRLING1, last))
    failures = [] if is_identity(multiply(forward, backward)) else ["product is not I"]
    results.append(_outcome("bases", "power <-> falling changes are inverse", failures))
    failures = [
        f"{family.value} n={n} x={x}"
        for family, value in (
            (BasisFamily.FALLING, falling_factorial),
            (BasisFamily.RISING, rising_factorial),
        )
        for n in range(last + 1)
        for x in range(-3, 4)
        if family_member(family, n)(x) != value(x, n)
    ]
    results.append(_outcome("bases", "factorial members evaluate to their products", failures))
    return results


def _target_triangle(target: Union[TriangleKind, PairKind], last: int) -> Triangle:
    if isinstance(target, TriangleKind):
        return base_triangle(target, last)
    return composite_product(target, last)


def check_oracles(options: SuiteOptions) -> List[CheckResult]:
    config = options.config
    results = []
    for kind in StructureKind:
        limit = config.oracle_pair_max_n if kind.is_pair else config.oracle_max_n
        top = options.oracle_order(limit)
        target = _target_triangle(kind.target, top)
        failures = []
        for n in range(top + 1):
            try:
                counts = [oracle_count(kind, n, m, limit) for m in range(n + 1)]
            except OracleLimitError as e:
                logger.info("skipping %s", e)
                results.append(CheckResult("oracles", f"{kind.value} n={n}", Status.SKIPPED, str(e)))
                continue
            failures.extend(
                f"n={n} m={m}: {count} != {target.entry(n, m)}"
                for m, count in enumerate(counts)
                if count != target.entry(n, m)
            )
            if kind is StructureKind.SET_PARTITIONS and sum(counts) != sequence(SequenceKind.BELL, n)[n]:
                failures.append(f"n={n}: total != Bell number")
            if kind is StructureKind.CYCLE_PERMUTATIONS and sum(counts) != factorial(n):
                failures.append(f"n={n}: total != n!")
        results.append(_outcome("oracles", f"{kind.value} = {_label(kind.target)}", failures))

    wrook_top = min(config.oracle_max_n, options.oracle_order(config.oracle_max_n))
    stirling1 = base_triangle(TriangleKind.STIRLING1, wrook_top + 1)
    failures = [
        f"n={n} k={k}"
        for n in range(wrook_top + 1)
        for k in range(n + 1)
        if wrook_placements(n, k) != stirling1.entry(n, n - k)
    ]
    results.append(_outcome("oracles", "wrook placements = [n, n-k]", failures))
    failures = [
        f"n={n} m={m}"
        for n in range(wrook_top)
        for m in range(n + 1)
        if wrook_placements(n + 1, n - m)
        != sum(stirling1.entry(n, k) * comb(k, m) for k in range(m, n + 1))
    ]
    results.append(_outcome("oracles", "wrooks on staircase n+1 = sum [n,k] C(k,m)", failures))
    return results


def _label(target: Union[TriangleKind, PairKind]) -> str:
    return target.symbol if isinstance(target, TriangleKind) else target.label


def check_absorption(options: SuiteOptions) -> List[CheckResult]:
    last = options.order(options.config.absorption_max_n)
    results = []
    for pair in ABSORPTION_PAIRS + (TriangleKind.LAH,):
        low = 1 if pair is PairKind.BINOMIAL_BINOMIAL else 2
        failures = [
            f"({n},{m})"
            for n in range(low, last + 1)
            for m in range(low, n + 1)
            if absorption_residual(pair, n, m) != 0
        ]
        results.append(_outcome("absorption", f"{_label(pair)} absorption", failures))
    return results


def check_truncation(options: SuiteOptions) -> List[CheckResult]:
    config = options.config
    top = options.order(config.truncation_max_n)
    # cut < top, so truncate() really drops rows
    cut = min(config.truncation_cut, top - 1) if top > 0 else 0
    builders: Dict[str, Callable[[int], Triangle]] = {"identity": identity_triangle}
    for kind in TriangleKind:
        builders[kind.value] = lambda last, kind=kind: base_triangle(kind, last)
    for pair in PairKind:
        builders[f"{pair.label} product"] = lambda last, pair=pair: composite_product(pair, last)
        builders[f"{pair.label} recurrence"] = lambda last, pair=pair: composite_recurrence(pair, last)
    for family, target in BASIS_CHANGES:
        builders[f"{family.value} -> {target.value}"] = (
            lambda last, f=family, t=target: change_matrix(f, t, last)
        )
    failures = [
        name for name, build in builders.items()
        if truncate(build(top), cut) != build(cut)
    ]
    return [_outcome("truncation", f"truncate(build({top}), {cut}) = build({cut})", failures)]


SUITES: Dict[str, Callable[[SuiteOptions], List[CheckResult]]] = {
    "closed-forms": check_closed_forms,
    "recurrences": check_recurrences,
    "inverses": check_inverses,
    "row-sums": check_row_sums,
    "bases": check_bases,
    "oracles": check_oracles,
    "absorption": check_absorption,
    "truncation": check_truncation,
}


def run_suites(name: str, options: SuiteOptions) -> List[CheckResult]:
    """Run one suite by name, or every suite for "all"."""
    names = list(SUITES) if name == "all" else [name]
    results = []
    for suite in names:
        logger.info("running suite %s", suite)
        results.extend(SUITES[suite](options))
    return results


def format_report(results: List[CheckResult]) -> str:
    """Fixed-width pass/fail table, one line per identity."""
    lines = []
    for result in results:
        line = f"{result.status.value:<8} {result.suite:<13} {result.identity}"
        if result.detail:
            line += f"  [{result.detail}]"
        lines.append(line)
    failed = sum(1 for r in results if r.status is Status.FAIL)
    skipped = sum(1 for r in results if r.status is Status.SKIPPED)
    lines.append(f"{len(results)} checks, {failed} failed, {skipped} skipped")
    return "\n".join(lines) + "\n"


def all_passed(results: List[CheckResult]) -> bool:
    return not any(result.status is Status.FAIL for result in results)
