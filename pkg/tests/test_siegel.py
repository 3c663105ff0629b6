import pytest

from gsp4count.counts import count
from gsp4count.reprtypes import ReprType
from gsp4count.siegel import (
    FIXED_VECTOR_DIMS,
    SubgroupKind,
    dim_from_fixed_vectors,
    dim_newforms,
    dim_newforms_paramodular_G,
    dim_siegel_cusp,
)
from oracles import dim_cusp_sp4, primes_below

G = SubgroupKind


def test_examples():
    assert dim_siegel_cusp(10, 7, G.FULL) == 1
    assert dim_siegel_cusp(3, 19, G.PARAMODULAR) == 1
    assert dim_siegel_cusp(2, 3, G.BOREL) == 0
    assert dim_newforms(3, 19, G.PARAMODULAR) == 1
    assert dim_newforms(3, 11, "borel") == 2
    assert [dim_newforms_paramodular_G(*a) for a in [(19, 2), (3, 19), (7, 13)]] == [1, 0, 2]


def test_full_level_matches_ring_of_forms():
    for k in range(1, 80):
        assert dim_siegel_cusp(k, 2, G.FULL) == dim_cusp_sp4(k)


def test_weight_one_is_zero():
    for p in primes_below(50):
        for H in G:
            assert dim_siegel_cusp(1, p, H) == 0
            if H is not G.FULL:
                assert dim_newforms(1, p, H) == 0


def test_unknown_only_at_weight_two_above_three():
    assert dim_siegel_cusp(2, 5, G.SIEGEL) is None
    assert dim_newforms(2, 7, G.BOREL) is None
    assert dim_siegel_cusp(2, 5, G.FULL) == 0
    for p in (2, 3):
        for H in G:
            assert dim_siegel_cusp(2, p, H) == 0


def test_monotone_under_inclusion():
    for p in (2, 3, 5, 7, 11):
        for k in range(1, 61):
            d = {H: dim_siegel_cusp(k, p, H) for H in G}
            if None in d.values():
                assert k == 2 and p >= 5
                continue
            assert d[G.BOREL] >= d[G.SIEGEL] >= d[G.FULL]
            assert d[G.BOREL] >= d[G.KLINGEN] >= d[G.FULL]
            assert d[G.PARAMODULAR] >= d[G.FULL]
            assert all(v >= 0 for v in d.values())


def test_solved_system_round_trips_through_fixed_vector_table():
    for p in (2, 3, 5, 13):
        for k in range(3, 101):
            s = {o: count(k, p, o).value for o in ReprType}
            for H in G:
                assert dim_from_fixed_vectors(s, H) == dim_siegel_cusp(k, p, H), (k, p, H)


def test_fixed_vector_table():
    assert FIXED_VECTOR_DIMS[G.SIEGEL]["VIa"] + FIXED_VECTOR_DIMS[G.SIEGEL]["VIb"] == 2
    assert FIXED_VECTOR_DIMS[G.BOREL]["VIa"] + FIXED_VECTOR_DIMS[G.BOREL]["VIb"] == 4
    assert FIXED_VECTOR_DIMS[G.KLINGEN]["VIa"] == 1
    for row in FIXED_VECTOR_DIMS.values():
        assert row.get("IIIa", 0) == row.get("VIa", 0) + row.get("VIb", 0)


def test_newforms_add_up_at_paramodular_level():
    # old forms at K(p) come from two copies of each level-one form of type I
    for p in (2, 3, 5, 7):
        for k in range(3, 40):
            new = dim_newforms(k, p, G.PARAMODULAR)
            assert dim_siegel_cusp(k, p, G.PARAMODULAR) == new + 2 * count(k, p, "I").value + count(k, p, "IIb").value


def test_full_group_has_no_newforms():
    with pytest.raises(ValueError):
        dim_newforms(10, 5, G.FULL)
