from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gsp4count.gfcatalog import gf_catalog
from gsp4count.reprtypes import ReprType
from gsp4count.series import (
    CoefficientStream,
    GFBuilder,
    Polynomial,
    RationalGeneratingFunction,
    coefficient,
    expand,
    one_minus_t_pow,
    poly,
    t_pow,
)
from oracles import dim_cusp_sp4, series_by_division

CATALOG_PRIMES = (2, 3, 5, 7, 11, 13)


def test_geometric_series():
    gf = RationalGeneratingFunction(poly(1), poly(1, -1))
    assert expand(gf, 5).coefficients == (1,) * 6
    gf = RationalGeneratingFunction(poly(0, 1), poly(1, -1) ** 2)
    assert expand(gf, 6).coefficients == (0, 1, 2, 3, 4, 5, 6)


def test_denominator_sign_is_normalised():
    gf = RationalGeneratingFunction(poly(1), poly(-1, 1))
    assert gf.denominator[0] == 1
    assert expand(gf, 3).coefficients == (-1, -1, -1, -1)


def test_rejects_bad_denominators():
    with pytest.raises(ValueError):
        RationalGeneratingFunction(poly(1), poly(2, 1))
    with pytest.raises(ValueError):
        RationalGeneratingFunction(poly(Fraction(1, 2)), poly(1))
    with pytest.raises(ZeroDivisionError):
        RationalGeneratingFunction(poly(1), Polynomial(()))


def test_polynomial_arithmetic():
    a, b = poly(1, 2), poly(0, 1, 1)
    assert (a * b).coefficients == (0, 1, 3, 2)
    assert (a - a).is_zero
    assert (a**3)(2) == 125
    assert t_pow(3, 5).shift(2) == poly(0, 0, 0, 0, 0, 5)
    assert poly(1, 0, -2).to_text() == "0:1 2:-2"


@given(
    st.lists(st.integers(-5, 5), min_size=1, max_size=6),
    st.lists(st.integers(-3, 3), min_size=0, max_size=5),
    st.lists(st.integers(-5, 5), min_size=1, max_size=6),
)
def test_sum_is_linear_in_coefficients(n1, dtail, n2):
    den = poly(1, *dtail)
    f = RationalGeneratingFunction(poly(*n1), den)
    g = RationalGeneratingFunction(poly(*n2), poly(1, -1))
    K = 25
    s = expand(f + g, K).coefficients
    assert s == tuple(x + y for x, y in zip(expand(f, K).coefficients, expand(g, K).coefficients))


def test_builder_takes_least_common_denominator():
    # 1/2 / (1 - t) + 1/2 / (1 + t) = 1 / (1 - t^2)
    gf = GFBuilder().add(Fraction(1, 2), 1, Counter({1: 1})).add(Fraction(1, 2), 1, Counter({2: 1})).build()
    assert gf.numerator == poly(1)
    assert gf.denominator == poly(1, 0, -1)
    assert gf == RationalGeneratingFunction(poly(1), poly(1, 0, -1))
    assert sorted(one_minus_t_pow(6).elements()) == [1, 2, 3, 6]


def test_builder_refuses_non_integral_numerator():
    b = GFBuilder().add(Fraction(1, 3), poly(1), Counter({1: 1}))
    with pytest.raises(ValueError):
        b.build()


def test_recurrence_matches_long_division():
    for p in CATALOG_PRIMES:
        for omega in ReprType:
            gf = gf_catalog(p, omega)
            slow = series_by_division(gf.numerator.coefficients, gf.denominator.coefficients, 60)
            assert list(expand(gf, 60).coefficients) == slow, (p, omega)


def test_catalog_coefficients_non_negative():
    for p in CATALOG_PRIMES:
        for omega in ReprType:
            coeffs = expand(gf_catalog(p, omega), 500).coefficients
            assert min(coeffs) >= 0, (p, omega)
            assert coeffs[:3] == (0, 0, 0) or p >= 5, (p, omega)


def test_first_three_coefficients_vanish_except_known_slots():
    for p in CATALOG_PRIMES:
        for omega in ReprType:
            c = expand(gf_catalog(p, omega), 2).coefficients
            assert c[0] == 0 and c[1] == 0, (p, omega)


def test_level_one_against_ring_of_siegel_forms():
    sI = expand(gf_catalog(2, ReprType.I), 120).coefficients
    sIIb = expand(gf_catalog(2, ReprType.IIb), 120).coefficients
    for k in range(121):
        assert sI[k] + sIIb[k] == dim_cusp_sp4(k), k


def test_coefficient_stream_extends_consistently():
    gf = gf_catalog(3, ReprType.IIa)
    stream = CoefficientStream(gf)
    assert stream[40] == coefficient(gf, 40)
    assert stream.upto(80) == expand(gf, 80).coefficients
    assert stream[-1] == 0


def test_rational_function_text():
    text = gf_catalog(2, ReprType.IIb).to_text()
    assert text.startswith("(") and " / " in text
