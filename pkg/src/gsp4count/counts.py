"""Counts s_k(p, type) of level-p cuspidal representations of GSp(4).

Three independent routes are available:

* closed forms (quasi-polynomials in ``k`` with periodic corrections),
* coefficients of the rational generating functions in :mod:`gfcatalog`,
* for the lift types, products and sums of elliptic +/- new-space dimensions.

:func:`count` picks one of them per (k, p, type) and records which.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .arith import exact_int, kronecker_delta, require_prime, seq
from .arith import symbol_minus_one, symbol_minus_three
from .classnum import quadratic_data
from .elliptic import dim_cusp_sl2, dim_new_pm
from .gfcatalog import gf_catalog, yoshida_cp
from .reprtypes import GENERIC, LIFTS, ReprType, ZeroType, parse_type
from .series import CoefficientStream

__all__ = [
    "Route",
    "CountResult",
    "count",
    "closed_form",
    "series_count",
    "count_via_relation",
    "count_table",
    "yoshida_cp",
]

F = Fraction
TypeLike = Union[ReprType, ZeroType, str]


class Route(str, enum.Enum):
    CLOSED_FORM = "closed-form"
    SERIES = "series"
    RELATION = "relation"
    FORCED_ZERO = "forced-zero"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CountResult:
    k: int
    p: int
    omega: Union[ReprType, ZeroType]
    value: Optional[int]
    route: Optional[Route]

    @property
    def known(self) -> bool:
        return self.value is not None

    def render(self) -> str:
        return "unknown" if self.value is None else str(self.value)


def _cubic(k: int) -> int:
    return (k - 2) * (k - 1) * (2 * k - 3)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# -- closed forms -----------------------------------------------------------


def _closed_I(k: int, p: int) -> Fraction:
    s = _sign(k)
    return (
        F(_cubic(k), 2**7 * 3**3 * 5)
        + F(7 * s, 2**7 * 3**2) * (k - 2) * (k - 1)
        + F(5, 2**4 * 3)
        + kronecker_delta(k, 3)
        - kronecker_delta(k, 2)
        - F(47, 2**7 * 3**3) * (2 * k - 3)
        + F(61, 2**7) * s
        - F(13, 2**2 * 3**3) * seq("c3hat", k)
        - F(1, 6) * seq("c3", k)
        + F(1, 2**5 * 3) * seq("f4", k)
        - F(1, 8) * seq("c4prime", k)
        + F(1, 8) * seq("c4", k)
        + F(1, 5) * seq("c5", k)
        + F(1, 2**2 * 3**3) * seq("f6", k)
        + F(1, 12) * seq("c6hat", k)
        + F(1, 9) * seq("c6", k)
        + F(1, 12) * seq("c12", k)
        - F(2 * k - 3, 16) * s
        - F(1, 6) * seq("c3hat", k) * s
    )


def _closed_IIb(k: int, p: int) -> Fraction:
    if k % 2:
        return F(0)
    return F(2 * k - 3, 12) - F(3, 4) + F(seq("c3hat", k), 3) + kronecker_delta(k, 2)


def _lift_common(k: int, p: int, e1_sign: int) -> Fraction:
    e1, e3 = symbol_minus_one(p), symbol_minus_three(p)
    return (
        F(2 * k - 3, 24) * (p - 1)
        + e1_sign * F(1 - e1, 8)
        - F(seq("c3hat", k) * (1 - e3), 6)
    )


def _closed_Vb(k: int, p: int) -> Fraction:
    if k % 2:
        return F(0)
    return _lift_common(k, p, 1) - F(quadratic_data(p).hb, 4)


def _closed_VIbP(k: int, p: int) -> Fraction:
    if k % 2:
        return F(0)
    return _lift_common(k, p, 1) + F(quadratic_data(p).hb, 4) - kronecker_delta(k, 2)


def _closed_VIc(k: int, p: int) -> Fraction:
    if k % 2 == 0:
        return F(0)
    return _lift_common(k, p, -1) - F(quadratic_data(p).hb, 4)


def _closed_VIbY(k: int, p: int) -> Fraction:
    e1, e3 = symbol_minus_one(p), symbol_minus_three(p)
    hb = quadratic_data(p).hb
    s = _sign(k)
    d2 = kronecker_delta(k, 2)
    weight_part = (
        F(2 * k - 3, 12) * (p - 1)
        + s * F(1 - e1, 4)
        - F(seq("c3hat", k) * (1 - e3), 3)
        - d2
    )
    return yoshida_cp(p) * weight_part + F(2 - hb, 4) * d2 + s * F(hb * hb - 2 * hb, 8)


def _closed_IIa(k: int, p: int) -> Fraction:
    e1, e3 = symbol_minus_one(p), symbol_minus_three(p)
    hb = quadratic_data(p).hb
    s = _sign(k)
    sel4 = 1 if p % 8 in (3, 5) else 0
    sel5 = 1 if p == 5 else {1: 0, 4: 0, 2: 2, 3: 2}[p % 5]
    return (
        F((p * p - 1) * _cubic(k), 2**7 * 3**3 * 5)
        + F(-4 * e3 - 3 * e1 + p - 3, 2**3 * 3)
        + F(hb, 4)
        - kronecker_delta(k, 3)
        + F(16 * (p + 3) * e3 + 9 * (p + 4) * e1 - 84 * p + 119, 2**7 * 3**3) * (2 * k - 3)
        + F((16 * e3 - p + 12) * (e1 - 1) + 3 * (p - 49), 2**7 * 3) * s
        + F(s * (2 * k - 3), 2**3 * 3)
        + F((e3 + 1) * (9 * e1 + p - 6) - 4 * (p - 8), 2**3 * 3**3) * seq("c3hat", k)
        + F(s * seq("c3hat", k), 6)
        - F(seq("c4", k) * sel4, 4)
        - F(seq("c5", k) * sel5, 5)
    )


def _closed_IIIaVIab(k: int, p: int) -> Fraction:
    e1, e3 = symbol_minus_one(p), symbol_minus_three(p)
    hb = quadratic_data(p).hb
    s = _sign(k)
    sel4 = 1 if p % 8 == 7 else 0
    sel5 = 1 if p == 5 else {1: 0, 2: 1, 3: 1, 4: 2}[p % 5]
    return (
        F((p - 1) * (p * p + p + 2) * _cubic(k), 2**8 * 3**3 * 5)
        + F(3 * e1 - p - 2, 2**4 * 3)
        - F(hb, 8)
        - F(hb * hb - 2 * hb, 16) * s
        - kronecker_delta(k, 3)
        + F(7 * (p - 1) * (p + 3) * s, 2**8 * 3**2) * (k - 2) * (k - 1)
        - F((p - 1) * (-32 * e3 - 27 * e1 + 12 * p - 97), 2**8 * 3**3) * (2 * k - 3)
        - F((32 * e3 - 5 * p - 3) * (9 * e1 - 17) - 40 * (p + 7), 2**8 * 3**3) * s
        - F(p - 1, 2**3 * 3) * s * (2 * k - 3)
        + F(1 - e3, 6) * seq("c3", k)
        + F((p + 5) * (1 - e3), 2**2 * 3**3) * seq("c3hat", k)
        + F(1 - e3, 2**2 * 3) * seq("c3hat", k) * s
        + F((p + 1) * e1 + p - 3, 2**6 * 3) * seq("f4", k)
        + F(1 - e1, 8) * seq("c4prime", k)
        + F((p + 1) * e3 + p - 3, 2**3 * 3**3) * seq("f6", k)
        + F(2 * (e3 - 2), 27) * seq("c6", k)
        + F(5 * e3 - 13, 2**2 * 3**3) * seq("c6hat", k)
        + F(2 * (e3 + 1), 27) * seq("c6prime", k)
        + F((e3 + 1) * (e1 + 1) - 4, 2**3 * 3) * seq("c12", k)
        - F(seq("c4", k) * sel4, 4)
        - F(seq("c5", k) * sel5, 5)
    )


def _closed_IVa(k: int, p: int) -> Fraction:
    e1, e3 = symbol_minus_one(p), symbol_minus_three(p)
    s = _sign(k)
    sel4 = 1 if p % 8 == 7 else 0
    sel5 = 1 if p == 5 else {1: 0, 2: 2, 3: 2, 4: 4}[p % 5]
    return (
        F((p - 1) * (p**3 - 1) * _cubic(k), 2**7 * 3**3 * 5)
        + F(7 * (p - 1) ** 2 * s, 2**7 * 3**2) * (k - 2) * (k - 1)
        + kronecker_delta(k, 3)
        + F((p - 1) * (16 * e3 + 9 * e1 - 25), 2**7 * 3**3) * (2 * k - 3)
        + F((e3 - 1) * (9 * e1 + p - 10), 2**3 * 3**3) * seq("c3hat", k)
        + F((16 * e3 - p - 15) * (9 * e1 - 25) - 16 * (p + 31), 2**7 * 3**3) * s
        + F((e1 - 1) * (p - 1), 2**5 * 3) * seq("f4", k)
        + F((e3 - 1) * (p - 1), 2**2 * 3**3) * seq("f6", k)
        - F(4 * (e3 - 2), 27) * seq("c6", k)
        + F(2 * (e3 + 1), 27) * seq("c6hat", k)
        - F(4 * (e3 + 1), 27) * seq("c6prime", k)
        + F((e3 - 1) * (e1 - 1), 2**2 * 3) * seq("c12", k)
        + F(seq("c4", k) * sel4, 2)
        + F(seq("c5", k) * sel5, 5)
    )


def _closed_Va(k: int, p: int) -> Fraction:
    e1, e3 = symbol_minus_one(p), symbol_minus_three(p)
    hb = quadratic_data(p).hb
    s = _sign(k)
    sel4 = 1 if p % 8 == 7 else 0
    sel5 = 0 if p == 5 else {1: 0, 2: 1, 3: 1, 4: -2}[p % 5]
    return (
        F(p * (p - 1) ** 2 * _cubic(k), 2**8 * 3**3 * 5)
        + F(1 - e1, 16)
        - F(hb, 8)
        + F(hb * hb - 2 * hb, 16) * s
        - F(7 * (p - 1) ** 2 * s, 2**8 * 3**2) * (k - 2) * (k - 1)
        + F(p - 1, 2**4 * 3) * (2 * k - 3) * s
        - F(1 - e3, 2**2 * 3) * seq("c3hat", k) * s
        - F((p - 1) * (-32 * e3 - 27 * e1 + 12 * p - 97), 2**8 * 3**3) * (2 * k - 3)
        - F((p - 4) * (e3 - 1), 2**2 * 3**3) * seq("c3hat", k)
        + F((32 * e3 - 5 * p - 3) * (-9 * e1 + 1) - 40 * (p + 7), 2**8 * 3**3) * s
        - F((p - 1) * (e1 - 1), 2**6 * 3) * seq("f4", k)
        - F((p - 1) * (e3 - 1), 2**3 * 3**3) * seq("f6", k)
        + F(2 * (2 * e3 - 1), 27) * seq("c6", k)
        + F(e3 + 1, 27) * seq("c6hat", k)
        - F(2 * (e3 + 1), 27) * seq("c6prime", k)
        - F((e3 - 1) * (e1 - 1), 2**3 * 3) * seq("c12", k)
        - F(seq("c4", k) * sel4, 4)
        + F(seq("c5", k) * sel5, 5)
    )


_CLOSED = {
    ReprType.I: (_closed_I, 1, 2),
    ReprType.IIb: (_closed_IIb, 1, 2),
    ReprType.Vb: (_closed_Vb, 2, 5),
    ReprType.VIbP: (_closed_VIbP, 2, 5),
    ReprType.VIc: (_closed_VIc, 2, 5),
    ReprType.VIbY: (_closed_VIbY, 2, 5),
    ReprType.IIa: (_closed_IIa, 3, 5),
    ReprType.IIIaVIab: (_closed_IIIaVIab, 3, 5),
    ReprType.IVa: (_closed_IVa, 3, 5),
    ReprType.Va: (_closed_Va, 3, 5),
}

_FORMULA_NAMES = {
    ReprType.I: "closed form for s_k(p,I)",
    ReprType.IIb: "closed form for s_k(p,IIb)",
    ReprType.Vb: "closed form for s_k(p,Vb)",
    ReprType.VIbP: "closed form for s_k^(P)(p,VIb)",
    ReprType.VIc: "closed form for s_k(p,VIc)",
    ReprType.VIbY: "closed form for s_k^(Y)(p,VIb)",
    ReprType.IIa: "closed form for s_k(p,IIa)",
    ReprType.IIIaVIab: "closed form for s_k(p,IIIa+VIa/b)",
    ReprType.IVa: "closed form for s_k(p,IVa)",
    ReprType.Va: "closed form for s_k(p,Va)",
}


def closed_form_available(k: int, p: int, omega: ReprType) -> bool:
    _, kmin, pmin = _CLOSED[omega]
    return k >= kmin and p >= pmin


def closed_form(k: int, p: int, omega: TypeLike) -> int:
    """Evaluate the closed form; raises if it is not stated for (k, p)."""
    omega = _as_counted(omega)
    require_prime(p)
    fn, kmin, pmin = _CLOSED[omega]
    if k < kmin or p < pmin:
        raise ValueError(f"no closed form for {omega} at k={k}, p={p}")
    return exact_int(fn(k, p), f"{_FORMULA_NAMES[omega]} at k={k}, p={p}")


# -- series and relation routes --------------------------------------------


_STREAMS: dict[tuple[int, ReprType], CoefficientStream] = {}
_STREAMS_LOCK = threading.Lock()


def _stream(p: int, omega: ReprType) -> CoefficientStream:
    key = (p, omega)
    with _STREAMS_LOCK:
        stream = _STREAMS.get(key)
        if stream is None:
            stream = _STREAMS[key] = CoefficientStream(gf_catalog(p, omega))
    return stream


def series_count(k: int, p: int, omega: TypeLike) -> int:
    omega = _as_counted(omega)
    require_prime(p)
    value = _stream(p, omega)[k]
    if value < 0:
        raise ArithmeticError(f"negative series coefficient for {omega} at k={k}, p={p}")
    return value


def series_counts(p: int, omega: TypeLike, K: int) -> tuple[int, ...]:
    """All coefficients ``s_0..s_K`` in one expansion."""
    require_prime(p)
    return _stream(p, _as_counted(omega)).upto(K)


def count_via_relation(k: int, p: int, omega: TypeLike) -> int:
    """Lift counts from elliptic newform dimensions of weights 2k-2 and 2."""
    omega = _as_counted(omega)
    require_prime(p)
    if k < 2:
        raise ValueError(f"relation path needs k >= 2, got {k}")
    w = 2 * k - 2
    even = k % 2 == 0
    if omega is ReprType.IIb:
        return dim_cusp_sl2(w) if even else 0
    if omega is ReprType.Vb:
        return dim_new_pm(w, p, -1) if even else 0
    if omega is ReprType.VIbP:
        return dim_new_pm(w, p, +1) if even else 0
    if omega is ReprType.VIc:
        return 0 if even else dim_new_pm(w, p, -1)
    if omega is ReprType.VIbY:
        plus2, minus2 = dim_new_pm(2, p, +1), dim_new_pm(2, p, -1)
        plus_w, minus_w = dim_new_pm(w, p, +1), dim_new_pm(w, p, -1)
        if even:
            return plus_w * plus2 + minus_w * minus2
        return minus_w * plus2 + plus_w * minus2
    raise ValueError(f"no lifting relation for {omega}")


# -- dispatch ---------------------------------------------------------------


def _as_counted(omega: TypeLike) -> ReprType:
    if isinstance(omega, str) and not isinstance(omega, (ReprType, ZeroType)):
        omega = parse_type(omega)
    if isinstance(omega, ZeroType):
        raise ValueError(f"{omega} is identically zero and has no formula")
    return ReprType(omega)


def count(k: int, p: int, omega: TypeLike) -> CountResult:
    if isinstance(omega, str) and not isinstance(omega, (ReprType, ZeroType)):
        omega = parse_type(omega)
    require_prime(p)
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"weight must be a positive integer, got {k!r}")
    if isinstance(omega, ZeroType) or k == 1:
        return CountResult(k, p, omega, 0, Route.FORCED_ZERO)
    omega = ReprType(omega)

    if omega in (ReprType.I, ReprType.IIb):
        return CountResult(k, p, omega, closed_form(k, p, omega), Route.CLOSED_FORM)
    if p in (2, 3):
        return CountResult(k, p, omega, series_count(k, p, omega), Route.SERIES)
    if omega in LIFTS:
        return CountResult(k, p, omega, closed_form(k, p, omega), Route.CLOSED_FORM)
    if k == 2:
        return CountResult(k, p, omega, None, None)
    return CountResult(k, p, omega, closed_form(k, p, omega), Route.CLOSED_FORM)


def count_value(k: int, p: int, omega: TypeLike) -> Optional[int]:
    return count(k, p, omega).value


def count_table(
    omega: TypeLike, primes: Iterable[int], k_range: Iterable[int]
) -> list[list[CountResult]]:
    """Rows indexed by prime (ascending), columns by weight (ascending)."""
    ks = sorted(set(k_range))
    return [[count(k, p, omega) for k in ks] for p in sorted(set(primes))]


__all__ += ["closed_form_available", "count_value", "series_counts", "GENERIC", "LIFTS"]
