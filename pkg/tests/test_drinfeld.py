import random

import pytest

from qfgraph.drinfeld import (DrinfeldPoly, KRFactor, dual, dual_left, expand,
                              expand_all, is_dissociate, multiply, q_factorize,
                              restrict)
from qfgraph.dynkin import DynkinA, Interval
from qfgraph.redsets import sl2_set


def test_expand_examples():
    assert expand(KRFactor(1, 3, 2)).roots == ((1, 2), (1, 4))
    assert expand(KRFactor(2, 0, 1)).roots == ((2, 0),)
    assert expand(KRFactor(3, 6, 3)).roots == ((3, 4), (3, 6), (3, 8))


def test_factor_roots_progression():
    assert KRFactor(1, 3, 2).roots() == (4, 2)
    assert KRFactor(3, 6, 3).roots() == (8, 6, 4)
    with pytest.raises(ValueError):
        KRFactor(1, 0, 0)


def test_q_factorize_merges_weight_one_pair():
    'two gap-2 roots of one color coalesce into a single weight-2 string'
    poly = DrinfeldPoly.from_roots([(1, 2), (1, 4)]) * expand(KRFactor(2, 0, 2))
    assert q_factorize(poly) == (KRFactor(1, 3, 2), KRFactor(2, 0, 2))


def test_q_factorize_keeps_distinct_strings():
    poly = DrinfeldPoly.from_roots([(3, 8)]) * expand(KRFactor(3, 6, 3))
    assert poly.roots == ((3, 4), (3, 6), (3, 8), (3, 8))
    assert q_factorize(poly) == (KRFactor(3, 6, 3), KRFactor(3, 8, 1))
    assert not sl2_set(1, 3).contains_signed(2)


def test_q_factorize_single_root():
    assert q_factorize(DrinfeldPoly.from_roots([(2, 5)])) == (KRFactor(2, 5, 1),)


def test_q_factorize_nested_overlap():
    'overlapping strings split into span union plus span intersection'
    poly = DrinfeldPoly.from_roots([(1, 4), (1, 2), (1, 2), (1, 0)])
    assert q_factorize(poly) == (KRFactor(1, 2, 1), KRFactor(1, 2, 3))


def test_q_factorize_mixed_parity():
    poly = DrinfeldPoly.from_roots([(1, 0), (1, 1), (1, 2)])
    assert q_factorize(poly) == (KRFactor(1, 1, 1), KRFactor(1, 1, 2))


def test_q_factorize_output_is_dissociate_and_root_preserving():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 4)
        roots = [(rng.randint(1, n), rng.randint(-5, 5))
                 for _ in range(rng.randint(1, 9))]
        poly = DrinfeldPoly.from_roots(roots)
        factors = q_factorize(poly)
        assert is_dissociate(factors)
        assert expand_all(factors) == poly
        assert q_factorize(expand_all(factors)) == factors


def test_q_factorize_merge_order_independent():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(1, 4)
        roots = [(rng.randint(1, n), rng.randint(-4, 4))
                 for _ in range(rng.randint(2, 8))]
        poly = DrinfeldPoly.from_roots(roots)
        reference = q_factorize(poly)
        for _ in range(4):
            assert q_factorize(poly, rng=rng) == reference


def test_multiply():
    unit = DrinfeldPoly.unit()
    pi = DrinfeldPoly.from_roots([(1, 0)])
    assert multiply(pi, unit) == pi
    assert multiply(pi, pi).roots == ((1, 0), (1, 0))
    assert multiply(expand(KRFactor(1, 1, 2)), expand(KRFactor(2, 5, 1))).roots \
        == ((1, 0), (1, 2), (2, 5))


def test_dual_whole_diagram():
    dg = DynkinA(2)
    assert dual(KRFactor(1, 7, 2), dg) == KRFactor(2, 4, 2)
    assert dual(KRFactor(2, 3, 1), dg) == KRFactor(1, 0, 1)


def test_dual_in_window():
    dg = DynkinA(2)
    assert dual(KRFactor(1, 0, 1), dg, Interval(1, 2)) == KRFactor(2, -3, 1)
    with pytest.raises(ValueError):
        dual(KRFactor(3, 0, 1), DynkinA(3), Interval(1, 2))


def test_dual_twice_is_exponent_shift():
    dg = DynkinA(4)
    for f in (KRFactor(1, 5, 2), KRFactor(3, -2, 4), KRFactor(4, 0, 1)):
        twice = dual(dual(f, dg), dg)
        assert twice == KRFactor(f.color, f.exponent - 2 * (dg.n + 1), f.weight)
        assert dual_left(dual(f, dg), dg) == f


def test_restrict():
    assert restrict(KRFactor(3, 6, 3), Interval(1, 3)) == KRFactor(3, 6, 3)
    assert restrict(KRFactor(3, 8, 1), Interval(1, 2)) is None
    assert restrict(KRFactor(2, 5, 1), Interval(2, 2)) == KRFactor(2, 5, 1)


def test_poly_restrict_and_json():
    poly = DrinfeldPoly.from_roots([(1, 0), (3, 2), (3, 4)])
    assert poly.restrict(Interval(3, 3)).roots == ((3, 2), (3, 4))
    f = KRFactor(2, -1, 3)
    assert KRFactor.from_json(f.to_json()) == f
    with pytest.raises(ValueError):
        KRFactor.from_json({"color": 1, "exponent": "x", "weight": 1})
    with pytest.raises(ValueError):
        KRFactor.from_json({"color": 1})
