import itertools

import pytest
from hypothesis import given, strategies as st

from fatpoints.core import Bidegree, BettiTable, ContractError, FatPointConfig, FatPointsError
from fatpoints.phi import phi_closed, phi_td
from fatpoints.resolution import (
    betti_closed,
    betti_recursive,
    d_sets,
    res_recursive,
    res_two_collinear,
    res_two_noncollinear,
    resolve,
)
from golden import BETTI_254, NONCOLLINEAR_52


def census(levels):
    return {bd: levels.count(bd) for bd in set(levels)}


def case_two_configs(mmax):
    for t in itertools.product(range(mmax + 1), repeat=3):
        m11, m12, m21 = t
        if m12 >= m21 and m11 > m21:
            yield t


def test_collinear_base_cases():
    r = res_two_collinear(0, 1)
    assert sorted(r.levels[0]) == [(0, 1), (1, 0)] and r.levels[1] == ((1, 1),)
    r = res_two_collinear(1, 1)
    assert sorted(r.levels[0]) == [(0, 2), (1, 0)] and r.levels[1] == ((1, 2),)
    assert sorted(res_two_collinear(2, 1).levels[0]) == [(0, 3), (1, 1), (2, 0)]
    with pytest.raises(FatPointsError):
        res_two_collinear(0, 0)


def test_noncollinear_base_cases():
    r = res_two_noncollinear(5, 2)
    for u in range(3):
        assert census(list(r.levels[u])) == NONCOLLINEAR_52[u]
    r = res_two_noncollinear(1, 1)
    assert census(list(r.levels[0])) == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert census(list(r.levels[1])) == {(2, 1): 2, (1, 2): 2}
    assert census(list(r.levels[2])) == {(2, 2): 1}
    with pytest.raises(FatPointsError):
        res_two_noncollinear(0, 0)


def test_reference_table_254_both_paths():
    expected = BettiTable.from_counts((u, a, b, m) for (u, a, b), m in BETTI_254.items())
    assert len(expected) == 27
    assert betti_closed((2, 5, 4)) == expected
    assert betti_recursive((2, 5, 4)) == expected


def test_recursion_contract_and_empty():
    with pytest.raises(ContractError):
        res_recursive((3, 2, 4))
    assert res_recursive((0, 0, 0)).ranks() == (0, 0, 0)
    assert resolve((3, 2, 4)).betti_table() == betti_closed((3, 4, 2)).transposed()


def test_homogeneous_one():
    t = betti_closed((1, 1, 1))
    assert t.level(0) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert t.level(1) == {(2, 1): 1, (1, 2): 1}
    assert t.level(2) == {}


def test_case_two_spot_values():
    t = betti_closed((3, 4, 2))
    assert t[(0, 6, 0)] == phi_td(3, 1, 0)
    assert t[(0, 4, 2)] == 1 + phi_td(3, 1, 2)
    assert t == betti_recursive((3, 4, 2))


def test_d_sets_examples():
    ds = d_sets((3, 4, 2))
    assert ds.d1 == ()
    assert ds.d2 == ((6, 0), (5, 1))
    assert ds.d3 == ((4, 2), (3, 3), (2, 4), (1, 5))
    assert ds.d4 == ((0, 7),)
    assert ds.which(3, 3) == 3 and ds.which(0, 0) is None
    assert d_sets((5, 2, 1)).d1 == ((6, 0),)
    for bad in [(1, 2, 1), (1, 2, 3)]:
        with pytest.raises(ContractError):
            d_sets(bad)


def test_closed_equals_recursive_up_to_six():
    for t in itertools.product(range(7), repeat=3):
        assert betti_closed(t) == betti_recursive(t), t


@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_closed_equals_recursive_random(m11, m12, m21):
    assert betti_closed((m11, m12, m21)) == betti_recursive((m11, m12, m21))


@given(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15))
def test_transposition_symmetry(m11, m12, m21):
    assert betti_closed((m11, m21, m12)) == betti_closed((m11, m12, m21)).transposed()


def test_homogeneous_level_zero():
    for m in range(1, 7):
        gens = betti_closed((m, m, m)).level(0)
        expected = {Bidegree(2 * m - b, b): phi_closed(m + 1, b) for b in range(2 * m + 1)}
        assert gens == {k: v for k, v in expected.items() if v}


def test_euler_characteristic():
    for t in itertools.product(range(7), repeat=3):
        if any(t):
            table = betti_closed(t)
            assert table.total(0) - table.total(1) + table.total(2) == 1, t


def test_case_one_antidiagonal_support():
    for m11, m12, m21 in itertools.product(range(7), repeat=3):
        if m12 >= m21 and m11 <= m21 and (m11, m12, m21) != (0, 0, 0):
            for u, a, b, _ in betti_closed((m11, m12, m21)):
                assert a + b == m12 + m21 + u


def test_d_sets_share_no_coordinate():
    for t in case_two_configs(8):
        pts = [p for s in d_sets(t).sets for p in s]
        assert len({a for a, _ in pts}) == len(pts) == len({b for _, b in pts}), t


def test_d_sets_shift_along_recursion():
    for m11, m12, m21 in case_two_configs(8):
        if m21 == 0:
            continue
        inner, outer = d_sets((m11 - 1, m12, m21 - 1)), d_sets((m11, m12, m21))
        for s_in, s_out in zip(inner.sets, outer.sets):
            for a, b in s_in:
                assert (a, b + 1) in s_out


def test_d_sets_emptiness():
    # the first two sets need m21 > 0 to be nonempty at all
    for m11, m12, m21 in case_two_configs(8):
        ds, bz = d_sets((m11, m12, m21)), m12 - m11
        assert (ds.d1 == ()) == (bz >= 0 or m21 == 0)
        assert (ds.d2 == ()) == (m21 == 0 or bz + m21 <= 0)
        if bz < 0 and bz + m21 == 1:
            assert all(b != -bz for _, b in ds.d3)


def test_cap_validation():
    with pytest.raises(FatPointsError):
        betti_closed((-1, 0, 0))
    assert betti_closed(FatPointConfig(0, 0, 0)) == BettiTable()
