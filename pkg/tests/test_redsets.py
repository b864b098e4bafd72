import itertools

import pytest

from qfgraph.dynkin import DynkinA, Interval
from qfgraph.redsets import minimal_window, r_set, sl2_set, string_parameter


def test_r_set_examples():
    assert r_set(DynkinA(2), 1, 1, 2, 1).sorted() == (3,)
    assert r_set(DynkinA(3), 3, 3, 1, 2).sorted() == (5, 7)
    assert r_set(DynkinA(2), 2, 2, 1, 1).sorted() == (4,)


def test_r_set_window_argument():
    dg = DynkinA(3)
    assert r_set(dg, 2, 1, 2, 1, Interval(2, 2)).sorted() == (2,)
    assert r_set(dg, 2, 1, 2, 1, Interval(1, 3)).sorted() == (2, 4)
    with pytest.raises(ValueError):
        r_set(dg, 1, 1, 3, 1, Interval(1, 2))
    with pytest.raises(ValueError):
        r_set(dg, 1, 0, 2, 1)


def test_sl2_set_examples():
    assert sl2_set(1, 1).sorted() == (2,)
    assert sl2_set(2, 2).sorted() == (2, 4)
    assert sl2_set(1, 3).sorted() == (4,)


def test_sl2_set_is_single_node_window():
    for n in range(1, 5):
        dg = DynkinA(n)
        for i in dg.nodes():
            for r, s in itertools.product(range(1, 5), repeat=2):
                window = Interval(i, i)
                assert sl2_set(r, s).elements == \
                    r_set(dg, i, r, i, s, window).elements


def test_member():
    assert r_set(DynkinA(3), 3, 3, 1, 2).member(-5)
    assert not r_set(DynkinA(3), 1, 2, 3, 1).member(7)
    assert not r_set(DynkinA(3), 1, 2, 3, 1).member(0)
    rs = r_set(DynkinA(2), 1, 1, 2, 1)
    assert rs.contains_signed(3) and not rs.contains_signed(-3)
    assert 3 in rs and -3 in rs and 5 not in rs


def test_string_parameter_examples():
    assert string_parameter(DynkinA(2), 2, 2, 1, 1, 4, Interval(1, 2)) == 0
    assert string_parameter(DynkinA(3), 3, 3, 1, 2, 5, Interval(1, 3)) == 1
    assert string_parameter(DynkinA(2), 1, 1, 2, 2, 3, Interval(1, 2)) is None


def test_string_parameter_window_and_sign():
    dg = DynkinA(3)
    assert string_parameter(dg, 2, 1, 2, 1, 4) == -1
    assert string_parameter(dg, 2, 1, 2, 1, 4, Interval(2, 2)) is None
    assert string_parameter(dg, 1, 1, 2, 1, 9) is None
    assert string_parameter(dg, 1, 1, 2, 1, -3) is None


def test_minimal_window_examples():
    assert minimal_window(DynkinA(2), 2, 2, 1, 1, 4) == Interval(1, 2)
    assert minimal_window(DynkinA(3), 2, 1, 2, 1, 4) == Interval(1, 3)
    assert minimal_window(DynkinA(3), 3, 3, 1, 2, 7) == Interval(1, 3)
    assert minimal_window(DynkinA(3), 1, 1, 2, 1, 9) is None


def test_set_shape_properties():
    'parity, cardinality, extremes, and symmetry on a small exhaustive grid'
    for n in range(1, 6):
        dg = DynkinA(n)
        windows = [Interval(a, b) for a in dg.nodes() for b in dg.nodes() if a <= b]
        for i, j in itertools.product(dg.nodes(), repeat=2):
            hull = Interval.hull(i, j)
            for window in windows:
                if not window.contains_interval(hull):
                    continue
                for r, s in itertools.product(range(1, 4), repeat=2):
                    rs = r_set(dg, i, r, j, s, window)
                    assert rs.elements == r_set(dg, j, s, i, r, window).elements
                    assert all(m > 0 for m in rs.elements)
                    d = dg.distance(i, j)
                    assert all((m - r - s - d) % 2 == 0 for m in rs.elements)
                    reach = window.boundary_distance(hull)
                    assert len(rs) == min(r, s) + reach
                    assert max(rs.elements) == r + s + d + 2 * reach
                    assert min(rs.elements) == r + s + d - 2 * (min(r, s) - 1)


def test_monotonicity_in_window():
    dg = DynkinA(5)
    for i, j in itertools.product(dg.nodes(), repeat=2):
        hull = Interval.hull(i, j)
        windows = [Interval(a, b) for a in dg.nodes() for b in dg.nodes()
                   if a <= b and Interval(a, b).contains_interval(hull)]
        for small, big in itertools.product(windows, repeat=2):
            if not big.contains_interval(small):
                continue
            for r, s in ((1, 1), (2, 3)):
                assert r_set(dg, i, r, j, s, small).elements <= \
                    r_set(dg, i, r, j, s, big).elements


def test_string_parameter_round_trip():
    for n in range(1, 6):
        dg = DynkinA(n)
        for i, j in itertools.product(dg.nodes(), repeat=2):
            for r, s in itertools.product(range(1, 4), repeat=2):
                for m in r_set(dg, i, r, j, s).sorted():
                    p = string_parameter(dg, i, r, j, s, m)
                    assert p is not None
                    assert r + s + dg.distance(i, j) - 2 * p == m


def test_minimal_window_brute_force():
    'formula window is admissible, minimal, and the unique minimum by inclusion'
    for n in range(1, 7):
        dg = DynkinA(n)
        windows = [Interval(a, b) for a in dg.nodes() for b in dg.nodes() if a <= b]
        for i, j in itertools.product(dg.nodes(), repeat=2):
            hull = Interval.hull(i, j)
            for r, s in itertools.product(range(1, 4), repeat=2):
                for m in r_set(dg, i, r, j, s).sorted():
                    formula = minimal_window(dg, i, r, j, s, m)
                    admissible = [
                        w for w in windows
                        if w.contains_interval(hull)
                        and r_set(dg, i, r, j, s, w).contains_signed(m)]
                    assert formula in admissible
                    assert all(w.contains_interval(formula) for w in admissible)
