"""Consistency suites: golden tables, route agreement, lift relations, Plancherel, limits.

Each suite returns a :class:`CheckReport`.  Failures carry the coordinates
and both disagreeing values, so a report is enough to reproduce a bug.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable

from .counts import closed_form, count, count_via_relation, series_counts
from .elliptic import dim_cusp_sl2_pm, dim_new_pm
from .plancherel import (
    asymptotic_coefficients,
    is_prime_power,
    limit_ratio,
    plancherel_mass,
    verify_mass_system,
)
from .arith import is_prime
from .reprtypes import GENERIC, LIFTS, ReprType

__all__ = ["CheckReport", "Failure", "SUITES", "run_checks", "load_golden_tables", "golden_cells"]

ROUTE_PRIMES = (5, 7, 11, 13, 17, 19)
ROUTE_KMAX = 200
RELATION_KMAX = 100
RELATION_PRIME_BOUND = 50
PLANCHEREL_QMAX = 121
MASS_PRIME_BOUND = 100
LIMIT_PRIMES = (2, 3, 5, 7)
LIMIT_WEIGHTS = (5000, 5001, 10000, 10001)


@dataclass
class Failure:
    what: str
    coords: dict
    expected: object
    got: object

    def __str__(self) -> str:
        where = ", ".join(f"{k}={v}" for k, v in self.coords.items())
        return f"{self.what} [{where}]: expected {self.expected}, got {self.got}"


@dataclass
class CheckReport:
    suite: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, what: str, expected, got, **coords) -> None:
        self.cases += 1
        if expected != got:
            self.failures.append(Failure(what, coords, expected, got))


def load_golden_tables() -> dict:
    text = resources.files("gsp4count").joinpath("data/golden_tables.json").read_text()
    return json.loads(text)


def golden_cells(types=None):
    """Yield (type, k, p, golden value) in table order: type, prime, weight."""
    data = load_golden_tables()
    for label, blocks in data.items():
        if types is not None and label not in types:
            continue
        primes = sorted({int(p) for blk in blocks.values() for p in blk["rows"]})
        for p in primes:
            cells = []
            for blk in blocks.values():
                cells.extend(zip(blk["weights"], blk["rows"][str(p)]))
            for k, v in sorted(cells):
                yield label, k, p, v


def check_golden_tables() -> CheckReport:
    report = CheckReport("appendix")
    for label, k, p, v in golden_cells():
        report.expect("golden cell", v, count(k, p, label).value, type=label, k=k, p=p)
    return report


def check_series_vs_closed() -> CheckReport:
    report = CheckReport("series-vs-closed")
    for p in ROUTE_PRIMES:
        for omega in ReprType:
            coeffs = series_counts(p, omega, ROUTE_KMAX)
            for k in range(3, ROUTE_KMAX + 1):
                report.expect(
                    "closed form vs series", coeffs[k], closed_form(k, p, omega),
                    type=str(omega), k=k, p=p,
                )
    return report


def check_relations() -> CheckReport:
    report = CheckReport("relations")
    for p in (2, 3):
        for omega in LIFTS:
            coeffs = series_counts(p, omega, ROUTE_KMAX)
            for k in range(2, ROUTE_KMAX + 1):
                report.expect(
                    "series vs relation", coeffs[k], count_via_relation(k, p, omega),
                    type=str(omega), k=k, p=p,
                )
    for k in range(2, RELATION_KMAX + 1, 2):
        report.expect(
            "IIb vs level-one minus space", dim_cusp_sl2_pm(2 * k - 2, -1),
            count(k, 2, ReprType.IIb).value, type="IIb", k=k,
        )
    for p in filter(is_prime, range(2, RELATION_PRIME_BOUND)):
        for k in range(2, RELATION_KMAX + 1):
            w = 2 * k - 2
            expected = {
                ReprType.Vb: dim_new_pm(w, p, -1) if k % 2 == 0 else 0,
                ReprType.VIbP: dim_new_pm(w, p, +1) if k % 2 == 0 else 0,
                ReprType.VIc: dim_new_pm(w, p, -1) if k % 2 else 0,
            }
            for omega, v in expected.items():
                report.expect(
                    "lift vs new-space dimension", v, count(k, p, omega).value,
                    type=str(omega), k=k, p=p,
                )
    return report


def check_plancherel() -> CheckReport:
    report = CheckReport("plancherel")
    for q in filter(is_prime_power, range(2, PLANCHEREL_QMAX + 1)):
        report.expect("volume/mass system", True, verify_mass_system(q), q=q)
    for p in filter(is_prime, range(2, MASS_PRIME_BOUND)):
        for omega in GENERIC:
            report.expect(
                "a equals m", plancherel_mass(p, omega), asymptotic_coefficients(p, omega).a,
                type=str(omega), p=p,
            )
    return report


def limit_bound(m: Fraction, k: int) -> Fraction:
    return m * Fraction(110, 2 * k - 3)


def check_limit() -> CheckReport:
    report = CheckReport("limit")
    for p in LIMIT_PRIMES:
        for omega in GENERIC:
            m = plancherel_mass(p, omega)
            for k in LIMIT_WEIGHTS:
                ratio = limit_ratio(k, p, omega)
                within = abs(ratio - m) <= limit_bound(m, k)
                report.expect(
                    "limit ratio within bound", True, within,
                    type=str(omega), k=k, p=p, ratio=float(ratio), m=m,
                )
    return report


SUITES: dict[str, Callable[[], CheckReport]] = {
    "appendix": check_golden_tables,
    "series-vs-closed": check_series_vs_closed,
    "relations": check_relations,
    "plancherel": check_plancherel,
    "limit": check_limit,
}


def run_checks(suite: str) -> list[CheckReport]:
    if suite == "all":
        return [fn() for fn in SUITES.values()]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return [SUITES[suite]()]
