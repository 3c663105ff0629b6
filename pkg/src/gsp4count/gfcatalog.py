"""Catalog of the generating functions ``sum_k s_k(p, type) t^k``.

For p = 2, 3 the functions are stored as explicit integer fractions.  For
p >= 5 the parametric formulas are assembled per prime: every summand is a
rational multiple of ``numerator / (product of cyclotomic factors)`` and the
summands are combined over their least common denominator.  The combined
numerator must come out integral, which is itself a transcription check.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .arith import require_prime, symbol_minus_one, symbol_minus_three
from .classnum import quadratic_data
from .reprtypes import ReprType
from .series import GFBuilder, Polynomial, RationalGeneratingFunction
from .series import factors, one_minus_t_pow, poly

__all__ = ["gf_catalog", "yoshida_cp", "covered"]

F = Fraction


def P(terms: dict[int, int]) -> Polynomial:
    return Polynomial.from_terms(terms)


def _den(*factors_) -> Polynomial:
    out = Polynomial((1,))
    for f in factors_:
        out = out * f
    return out


def om(n: int, mult: int = 1) -> Counter:
    """Cyclotomic multiset of ``(1 - t**n)**mult``."""
    c = one_minus_t_pow(n)
    return Counter({i: m * mult for i, m in c.items()})


def cyc(index: int, mult: int = 1) -> Counter:
    return Counter({index: mult})


def _omp(n: int) -> Polynomial:
    return Polynomial((1,) + (0,) * (n - 1) + (-1,))


D4 = _den(_omp(4), _omp(6), _omp(10), _omp(12))


def _level_one() -> dict[ReprType, RationalGeneratingFunction]:
    gf_I = (
        RationalGeneratingFunction(P({0: 1, 35: 1}), D4)
        - RationalGeneratingFunction(P({0: 1}), _den(_omp(4), _omp(6)))
        - RationalGeneratingFunction(P({10: 1}), _den(_omp(2), _omp(6)))
    )
    gf_IIb = RationalGeneratingFunction(P({10: 1}), _den(_omp(2), _omp(6)))
    return {ReprType.I: gf_I, ReprType.IIb: gf_IIb}


def _small_prime_table() -> dict[tuple[int, ReprType], RationalGeneratingFunction]:
    R = RationalGeneratingFunction
    zero = RationalGeneratingFunction.zero()
    d46 = _den(_omp(4), _omp(6))
    d26 = _den(_omp(2), _omp(6))
    T = {
        (2, ReprType.Vb): R(P({8: 1}), d46),
        (2, ReprType.VIbP): R(P({6: 1, 8: 1, 12: -1}), d46),
        (3, ReprType.Vb): R(P({6: 1}), d26),
        (3, ReprType.VIbP): R(P({4: 1, 8: 1, 10: -1}), d26),
        (2, ReprType.VIc): R(P({11: 1}), d46),
        (2, ReprType.VIbY): zero,
        (3, ReprType.VIc): R(P({9: 1}), d26),
        (3, ReprType.VIbY): zero,
    }
    T[2, ReprType.IIa] = R(
        P({0: 1, 2: 1, 4: 1, 6: -1, 8: -1}).shift(19) + P({0: 1, 2: 1, 4: -1, 6: -1, 8: 1}).shift(16),
        _den(_omp(4), _omp(4), _omp(6), _omp(10)),
    )
    T[3, ReprType.IIa] = R(
        P({0: 1, 2: 1, 4: 1, 6: 2, 8: 2, 10: -1, 12: -1, 14: -1}).shift(15)
        + P({0: 1, 2: 1, 4: 1, 6: 2, 10: -1, 12: -1, 14: 1}).shift(12),
        _den(_omp(4), _omp(6), _omp(6), _omp(10)),
    )
    T[2, ReprType.IIIaVIab] = R(
        P({0: 1, 2: 1, 4: 1, 6: 1, 8: 1, 10: -1}).shift(25)
        + P({0: 1, 2: 2, 4: 2, 6: 2, 8: 1, 12: -2, 14: -1, 16: -1, 18: -1, 22: 1}).shift(12),
        D4,
    )
    T[3, ReprType.IIIaVIab] = R(
        P({0: 1, 2: 1, 4: 1, 6: 2, 8: 3, 10: 2, 12: 2, 14: 2, 16: 1, 18: -1}).shift(17)
        + P({0: 1, 2: 2, 4: 3, 6: 4, 8: 5, 10: 4, 12: 1, 16: -2, 18: -2, 20: -2, 22: -1, 26: 1}).shift(8),
        D4,
    )
    T[2, ReprType.IVa] = R(
        P({0: 1, 2: 1, 4: 1, 6: 2, 8: 2, 12: 1, 16: -1, 18: -1, 22: 1}).shift(13)
        + P({0: 1, 2: 1, 4: 1, 10: 2, 12: 1, 16: 1, 18: 1, 22: -1}).shift(10),
        D4,
    )
    T[3, ReprType.IVa] = R(
        P({0: 1, 2: 2, 4: 5, 6: 6, 8: 8, 10: 9, 12: 9, 14: 5, 16: 5, 18: 2, 22: -1, 26: 1}).shift(9)
        + P({0: 1, 2: 2, 4: 5, 6: 6, 8: 8, 10: 7, 12: 7, 14: 7, 16: 5, 18: 2, 20: 2, 22: 1, 26: -1}).shift(6),
        D4,
    )
    T[2, ReprType.Va] = R(P({0: 1, 2: 1, 12: -1}).shift(15) + P({30: 1}), D4)
    T[3, ReprType.Va] = R(
        P({0: 1, 2: 1, 4: 2, 6: 2, 8: 2, 16: -1, 18: -1}).shift(11)
        + (P({0: 1, 4: 1, 6: 1}) * P({0: 1, 8: 1})).shift(16),
        D4,
    )
    return T


_LEVEL_ONE = _level_one()
_SMALL = _small_prime_table()


def yoshida_cp(p: int) -> Fraction:
    """The constant C(p) multiplying the weight-(2k-2) part of the Yoshida count."""
    require_prime(p, 5)
    e1, e3 = symbol_minus_one(p), symbol_minus_three(p)
    return F(p - 1, 24) + F(1 - e1, 8) + F(1 - e3, 6) - F(1, 2)


def _sel8(p: int, residues) -> int:
    return 1 if p % 8 in residues else 0


def _sel5(p: int, table: dict) -> int:
    """``table`` maps 'p5' (p == 5) and residues mod 5 to the case value."""
    if p == 5:
        return table.get("p5", 0)
    return table.get(p % 5, 0)


class _Params:
    def __init__(self, p: int):
        self.p = p
        self.e1 = symbol_minus_one(p)
        self.e3 = symbol_minus_three(p)
        q = quadratic_data(p)
        self.hb = q.hb
        self.hb2 = q.hb ** 2


def _gf_Vb(x: _Params, sign: int) -> RationalGeneratingFunction:
    # sign=-1: Vb, sign=+1: VIb(P)
    p, e1, e3, hb = x.p, x.e1, x.e3, x.hb
    g = GFBuilder()
    g.add(F(p - 1, 24), poly(1, 0, 3), om(2, 2))
    g.add(F(1 - e1, 8), 1, om(2))
    g.add(F(1 - e3, 6), 1, factors(3, 6))
    g.add(F(sign * hb, 4), 1, om(2))
    if sign > 0:
        g.add(-1, 1)
    return _shifted(g, 2)


def _gf_VIc(x: _Params) -> RationalGeneratingFunction:
    p, e1, e3, hb = x.p, x.e1, x.e3, x.hb
    g = GFBuilder()
    g.add(F(p - 1, 24), poly(3, 0, 1), om(2, 2))
    g.add(-F(1 - e1, 8), 1, om(2))
    g.add(F(1 - e3, 6), poly(0, 0, 1), factors(3, 6))
    g.add(-F(hb, 4), 1, om(2))
    return _shifted(g, 3)


def _gf_VIbY(x: _Params) -> RationalGeneratingFunction:
    p, e1, e3, hb, hb2 = x.p, x.e1, x.e3, x.hb, x.hb2
    C = yoshida_cp(p)
    g = GFBuilder()
    g.add(C * F(p - 1, 12), poly(1, 1), om(1, 2))
    g.add(C * F(1 - e1, 4), 1, cyc(2))
    g.add(C * F(1 - e3, 3), poly(1, 1), cyc(3))
    g.add(-C, 1)
    g.add(F(2 - hb, 4), 1)
    g.add(F(hb2 - 2 * hb, 8), 1, cyc(2))
    return _shifted(g, 2)


def _gf_IIa(x: _Params) -> RationalGeneratingFunction:
    p, e1, e3, hb = x.p, x.e1, x.e3, x.hb
    g = GFBuilder()
    g.add(F(p * p - 1, 2**6 * 3**2 * 5), poly(1, 1), om(1, 4))
    g.add(-F(p - 1, 2**5 * 3**2), poly(5, 13, 17, 12, 12), factors(om(2), om(3)))
    g.add(1, P({7: 1}), factors(om(2), om(6)))
    g.add(F(hb, 4), 1, om(1))
    g.add(-1, 1)
    g.add(F(p * (e3 - 1), 2**3 * 3**2), poly(1, 1), factors(om(1), om(3)))
    g.add(F(e3 - 1, 2**3 * 3), poly(-3, 1, 0, 4), factors(om(1), om(3)))
    g.add(F(p * (e1 - 1), 2**5 * 3), 1, factors(om(1), om(2)))
    g.add(F(e1 - 1, 2**3 * 3), poly(-4, 2, -1, 3, 3), factors(om(2), om(3)))
    g.add(-F((e3 - 1) * (e1 - 1), 2**3 * 3), 1, factors(2, 3))
    g.add(F(_sel8(p, (3, 5)), 4), 1, factors(2, 4))
    g.add(F(_sel5(p, {"p5": 1, 2: 2, 3: 2}), 5), poly(1, 1), cyc(5))
    return _shifted(g, 3)


_N = poly(34, -6, 133, -35, 264, -88, 344, -120, 342, -58, 224, 0, 86, 14, 13, 5)
_C31 = poly(-2, 2, -6, 6, -5, 3, -5, 3, -3, 1)
_C32 = poly(14, -8, -10, 6, -5, -2, 20, -6, -16, 4, 7)
_C11 = poly(-3, -4, 4, -8, 1, -4, 2)
_C12 = poly(12, 10, -43, 0, 40, 0, -36, 10, 13)


def _gf_IIIa(x: _Params) -> RationalGeneratingFunction:
    p, e1, e3, hb, hb2 = x.p, x.e1, x.e3, x.hb, x.hb2
    g = GFBuilder()
    g.add(F((p - 1) * (p * p + p + 2), 2**7 * 3**2 * 5), poly(1, 1), om(1, 4))
    g.add(-F((p - 1) * (p + 3), 2**7 * 3**2), poly(13, 2, 19, 0, -2), factors(2, om(2, 2)))
    g.add(F(p - 1, 2**4 * 3**2), _N, factors(cyc(4, 2), om(6, 2)))
    g.add(-1, 1)
    g.add(-F((p + 1) * (e3 - 1), 2**3 * 3**2), _C31, factors(om(1, 2), cyc(3, 2), cyc(6, 2)))
    g.add(-F(e3 - 1, 2**2 * 3**2), _C32, factors(om(1), 12, om(6)))
    g.add(-F((p + 1) * (e1 - 1), 2**6 * 3), _C11, factors(om(1), 4, om(4)))
    g.add(-F(e1 - 1, 2**5 * 3), _C12, factors(om(1), om(4), 12))
    g.add(F((e3 - 1) * (e1 - 1), 2**3 * 3), poly(0, -2, -2, 0, 1), factors(2, 12))
    g.add(F(hb2, 2**4), 1, cyc(2))
    g.add(-F(hb, 2**2), 1, om(2))
    g.add(F(_sel8(p, (7,)), 4), 1, factors(2, 4))
    g.add(F(_sel5(p, {"p5": 1, 2: 1, 3: 1, 4: 2}), 5), poly(1, 1), cyc(5))
    return _shifted(g, 3)


def _gf_IVa(x: _Params) -> RationalGeneratingFunction:
    p, e1, e3 = x.p, x.e1, x.e3
    g = GFBuilder()
    g.add(F((p - 1) * (p**3 - 1), 2**6 * 3**2 * 5), poly(1, 1), om(1, 4))
    g.add(-F(7 * (p - 1) ** 2, 2**6 * 3**2), 1, cyc(2, 3))
    g.add(1, 1)
    g.add(
        F((p - 1) * (e3 - 1), 2**3 * 3**2),
        poly(1, 1) * poly(3, -5, 10, -13, 10, -5, 3),
        factors(om(1, 2), cyc(3, 2), cyc(6, 2)),
    )
    g.add(F(2 * (e3 - 1), 3**2), 1, factors(2, 6))
    g.add(F((p - 1) * (e1 - 1), 2**5 * 3), poly(3, 0, -2, 0, 3), factors(om(1), 4, om(4)))
    g.add(-F((e3 - 1) * (e1 - 1), 2**3 * 3), poly(3, 6, 7, 6, 3), factors(2, 3, 12))
    g.add(-F(_sel8(p, (7,)), 2), 1, factors(2, 4))
    g.add(-F(_sel5(p, {"p5": 1, 2: 2, 3: 2, 4: 4}), 5), poly(1, 1), cyc(5))
    return _shifted(g, 3)


def _gf_Va(x: _Params) -> RationalGeneratingFunction:
    p, e1, e3, hb, hb2 = x.p, x.e1, x.e3, x.hb, x.hb2
    g = GFBuilder()
    g.add(F(p * (p - 1) ** 2, 2**7 * 3**2 * 5), poly(1, 1), om(1, 4))
    g.add(F((p - 1) ** 2, 2**7 * 3**2), poly(1, -30, -5, 0, 2), factors(om(1, 2), cyc(2, 3)))
    g.add(F(p - 1, 2**3 * 3), poly(0, 5, 0, -1), om(2, 2))
    g.add(-F(hb2, 2**4), 1, cyc(2))
    g.add(-F(hb, 2**2), poly(0, 1), om(2))
    g.add(
        F((p - 1) * (e3 - 1), 2**3 * 3**2),
        poly(0, 0, 2, -2, 9, -7, 7, -5, 3, -1),
        factors(om(1, 2), cyc(3, 2), cyc(6, 2)),
    )
    g.add(F(e3 - 1, 2 * 3**2), poly(-2, 0, 1, 3, 2), factors(2, 3, 6))
    g.add(-F((p - 1) * (e1 - 1), 2**6 * 3), poly(1, -4, -4, -8, 5, -4, 2), factors(om(1), 4, om(4)))
    g.add(-F(e1 - 1, 2**5), poly(1, 3), om(2))
    g.add(F((e3 - 1) * (e1 - 1), 2**3 * 3), poly(2, 2, 0, 0, 1), factors(2, 12))
    g.add(F(_sel8(p, (7,)), 4), 1, factors(2, 4))
    g.add(-F(_sel5(p, {2: 1, 3: 1, 4: -2}), 5), poly(1, 1), cyc(5))
    return _shifted(g, 3)


def _shifted(builder: GFBuilder, n: int) -> RationalGeneratingFunction:
    gf = builder.build()
    return RationalGeneratingFunction(gf.numerator.shift(n), gf.denominator)


_PARAMETRIC = {
    ReprType.Vb: lambda x: _gf_Vb(x, -1),
    ReprType.VIbP: lambda x: _gf_Vb(x, +1),
    ReprType.VIc: _gf_VIc,
    ReprType.VIbY: _gf_VIbY,
    ReprType.IIa: _gf_IIa,
    ReprType.IIIaVIab: _gf_IIIa,
    ReprType.IVa: _gf_IVa,
    ReprType.Va: _gf_Va,
}


def covered(p: int, omega: ReprType) -> bool:
    if omega in _LEVEL_ONE:
        return True
    if p in (2, 3):
        return (p, omega) in _SMALL
    return omega in _PARAMETRIC


@lru_cache(maxsize=None)
def gf_catalog(p: int, omega: ReprType) -> RationalGeneratingFunction:
    """Generating function ``sum_k s_k(p, omega) t^k`` for prime ``p``."""
    require_prime(p)
    omega = ReprType(omega)
    if omega in _LEVEL_ONE:
        return _LEVEL_ONE[omega]
    if p in (2, 3):
        return _SMALL[p, omega]
    return _PARAMETRIC[omega](_Params(p))
