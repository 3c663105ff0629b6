import pytest

from gsp4count.classnum import b_param, class_number, field_discriminant, quadratic_data, reduced_forms
from oracles import class_number_analytic, primes_below, reduced_form_count_box


@pytest.mark.parametrize("p,h", [(5, 2), (7, 1), (11, 1), (13, 2), (17, 4), (19, 1), (23, 3), (31, 3), (163, 1)])
def test_known_class_numbers(p, h):
    assert class_number(p) == h


def test_matches_analytic_formula_below_2000():
    for p in primes_below(2000):
        if p < 5:
            continue
        assert class_number(p) == class_number_analytic(field_discriminant(p)), p


def test_matches_box_scan_below_300():
    for p in primes_below(300):
        if p >= 5:
            assert class_number(p) == reduced_form_count_box(field_discriminant(p))


def test_parity_for_three_mod_four():
    # genus theory: a prime discriminant has odd class number
    for p in primes_below(2000):
        if p >= 5 and p % 4 == 3:
            assert class_number(p) % 2 == 1


def test_reduced_forms_are_reduced():
    for D in (-20, -23, -56, -31 * 4):
        for a, b, c in reduced_forms(D):
            assert b * b - 4 * a * c == D
            assert abs(b) <= a <= c


def test_b_param_and_discriminant():
    assert [b_param(p) for p in (5, 7, 11, 13, 23)] == [1, 2, 4, 1, 2]
    assert field_discriminant(7) == -7 and field_discriminant(5) == -20
    assert quadratic_data(19).hb == 4


def test_small_primes_rejected():
    with pytest.raises(ValueError):
        class_number(3)
    with pytest.raises(ValueError):
        reduced_forms(5)
