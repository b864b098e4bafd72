import itertools
from math import comb

import pytest

from qfgraph.drinfeld import KRFactor
from qfgraph.dynkin import DynkinA
from qfgraph.qchar import (ColumnTableau, LWeight, box_lweight,
                           dominant_product_lweights, fundamental_qchar,
                           socle_head, tableau_lweight)
from qfgraph.redsets import r_set


def lw(*factors):
    out = LWeight.identity()
    for color, exponent, power in factors:
        out = out * LWeight.fundamental(color, exponent, power)
    return out


def test_box_lweight_examples():
    dg = DynkinA(3)
    assert box_lweight(dg, 1, 0) == lw((1, 0, 1))
    assert box_lweight(dg, 4, 0) == lw((3, 4, -1))
    assert box_lweight(dg, 2, 3) == lw((2, 4, 1), (1, 5, -1))
    with pytest.raises(ValueError):
        box_lweight(dg, 5, 0)


def test_gapless_column_is_fundamental():
    for n in range(1, 6):
        dg = DynkinA(n)
        for k in range(1, n + 1):
            for s in (-2, 0, 3):
                T = ColumnTableau(tuple(range(1, k + 1)), s)
                assert tableau_lweight(dg, T) == lw((k, s + k - 1, 1))


def test_single_box_column():
    assert tableau_lweight(DynkinA(2), ColumnTableau((1,), 0)) == lw((1, 0, 1))


def test_one_gap_column_closed_form():
    'columns 1..k, l+1..l+i-k at support 1-i match the three-factor monomial'
    for n in range(1, 6):
        dg = DynkinA(n)
        for i in dg.nodes():
            for k in range(0, i):
                for l in range(k + 1, n - i + k + 2):
                    if k >= min(i, l) or l > n - i + k + 1:
                        continue
                    entries = tuple(range(1, k + 1)) + \
                        tuple(range(l + 1, l + i - k + 1))
                    T = ColumnTableau(entries, 1 - i)
                    expected = (lw((l, i + l - 2 * k, -1))
                                * _fund_or_unit(dg, k, i - k)
                                * _fund_or_unit(dg, i + l - k, l - k))
                    assert tableau_lweight(dg, T) == expected, (n, i, k, l)


def _fund_or_unit(dg, color, exponent):
    if color < 1 or color > dg.n:
        return LWeight.identity()
    return LWeight.fundamental(color, exponent)


def test_column_validation():
    with pytest.raises(ValueError):
        ColumnTableau((1, 1, 2), 0)
    with pytest.raises(ValueError):
        ColumnTableau((), 0)
    with pytest.raises(ValueError):
        tableau_lweight(DynkinA(2), ColumnTableau((1, 4), 0))


def test_fundamental_qchar_counts():
    for n in range(1, 9):
        dg = DynkinA(n)
        for i in dg.nodes():
            chars = fundamental_qchar(dg, i)
            assert len(chars) == comb(n + 1, i)
            assert len(set(chars)) == len(chars)
            assert lw((i, 0, 1)) in chars


def test_dominant_product_examples():
    dg = DynkinA(2)
    assert dominant_product_lweights(dg, 1, 1, 2) == \
        frozenset({lw((1, 0, 1), (1, 2, 1)), lw((2, 1, 1))})
    assert dominant_product_lweights(dg, 1, 2, 3) == \
        frozenset({lw((1, 0, 1), (2, 3, 1)), LWeight.identity()})
    dg3 = DynkinA(3)
    assert dominant_product_lweights(dg3, 2, 2, 4) == \
        frozenset({lw((2, 0, 1), (2, 4, 1)), LWeight.identity()})


def test_dominant_product_rejects_bad_gap():
    with pytest.raises(ValueError):
        dominant_product_lweights(DynkinA(3), 1, 3, 2)
    with pytest.raises(ValueError):
        dominant_product_lweights(DynkinA(2), 1, 1, 3)


def test_socle_head_examples():
    dg = DynkinA(2)
    sh = socle_head(dg, 1, 1, 2)
    assert sh.p == 0
    assert sh.socle == (KRFactor(2, 1, 1),)
    assert sh.dropped_trivial == 1
    assert sh.head == (KRFactor(1, 0, 1), KRFactor(1, 2, 1))

    sh = socle_head(DynkinA(3), 2, 2, 4)
    assert sh.p == -1
    assert sh.socle == ()
    assert sh.dropped_trivial == 2

    with pytest.raises(ValueError):
        socle_head(DynkinA(3), 1, 3, 2)


def test_socle_pair_simplicity_whenever_nontrivial():
    for n in range(1, 7):
        dg = DynkinA(n)
        for i, j in itertools.product(dg.nodes(), repeat=2):
            for m in r_set(dg, i, 1, j, 1).sorted():
                sh = socle_head(dg, i, j, m)
                if len(sh.socle) == 2:
                    a, b = sh.socle
                    assert not r_set(dg, a.color, 1, b.color, 1).member(
                        a.exponent - b.exponent)


def test_socle_head_matches_brute_force_dominants():
    for n in range(1, 6):
        dg = DynkinA(n)
        for i, j in itertools.product(dg.nodes(), repeat=2):
            for m in r_set(dg, i, 1, j, 1).sorted():
                sh = socle_head(dg, i, j, m)
                assert dominant_product_lweights(dg, i, j, m) == \
                    frozenset({sh.head_lweight(), sh.socle_lweight()})


def weyl_dim_sl3(a: int, b: int) -> int:
    'dimension of the simple sl3 module with highest weight a w1 + b w2'
    return (a + 1) * (b + 1) * (a + b + 2) // 2


def test_sl3_dimension_identity():
    'the rank-2 product of two first fundamentals decomposes as 3 x 3 = 6 + 3'
    sh = socle_head(DynkinA(2), 1, 1, 2)
    head_dim = weyl_dim_sl3(2, 0)
    socle_dim = weyl_dim_sl3(0, 1)
    assert weyl_dim_sl3(1, 0) ** 2 == head_dim + socle_dim
    assert head_dim == 6 and socle_dim == 3
    assert sh.head_poly().roots == ((1, 0), (1, 2))
