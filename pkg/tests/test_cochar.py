import itertools
import random
from fractions import Fraction

import pytest

from isolab.cochar import (Cocharacter, dominates, is_newton_point, lcm_denominator,
                           metric, min_gap, oplus, oplus_w0, polygon, superbasic_parts)
from isolab.errors import LengthMismatch, NotANewtonPoint, SumMismatch


F = Fraction


def subset_metric_oracle(x, y):
    """max over subsets I of |sum_I (x_i - y_i)| on dominant representatives."""
    n = x.n
    best = F(0)
    for r in range(n + 1):
        for idx in itertools.combinations(range(n), r):
            s = sum((x.slopes[i] - y.slopes[i] for i in idx), F(0))
            best = max(best, abs(s))
    return best


def rand_cochar(rng, n, den=6, lo=-4, hi=4):
    return Cocharacter(F(rng.randint(lo * den, hi * den), den) for _ in range(n))


def with_total(x, total):
    shift = (F(total) - x.total()) / x.n
    return Cocharacter(s + shift for s in x.slopes)


def test_dominates_examples():
    assert dominates(Cocharacter([F(1, 2), F(1, 2)]), Cocharacter([1, 0]))
    assert dominates(Cocharacter([F(2, 3), F(1, 3), 0]), Cocharacter([1, 0, 0]))
    assert not dominates(Cocharacter([1, 0]), Cocharacter([F(1, 2), F(1, 2)]))


def test_dominates_length_mismatch():
    with pytest.raises(LengthMismatch):
        dominates(Cocharacter([1]), Cocharacter([1, 0]))


def test_metric_examples():
    x = Cocharacter([1, 0])
    assert metric(x, x) == 0
    assert metric(x, Cocharacter([F(1, 2), F(1, 2)])) == F(1, 2)
    a = Cocharacter([1, 0, 0])
    b = Cocharacter([F(1, 3), F(1, 3), F(1, 3)])
    assert metric(a, b) == F(2, 3)
    assert subset_metric_oracle(a, b) == F(2, 3)


def test_metric_is_symmetric_and_matches_subset_oracle():
    rng = random.Random(1)
    for _ in range(80):
        n = rng.randint(2, 5)
        x = rand_cochar(rng, n)
        y = with_total(rand_cochar(rng, n), x.total())
        assert metric(x, y) == metric(y, x) == subset_metric_oracle(x, y)


def test_metric_sum_mismatch():
    with pytest.raises(SumMismatch):
        metric(Cocharacter([1, 0]), Cocharacter([1, 1]))


def test_oplus_examples():
    assert oplus(Cocharacter([2, 1]), Cocharacter([1, 0])) == Cocharacter([3, 1])
    assert oplus_w0(Cocharacter([2, 1]), Cocharacter([1, 0])) == Cocharacter([2, 2])
    x = Cocharacter([F(5, 2), -1, 0])
    assert oplus(x, Cocharacter([0, 0, 0])) == x


def test_superbasic_parts():
    x = Cocharacter([F(2, 3)] * 3 + [F(1, 2)] * 2)
    assert superbasic_parts(x) == [(F(2, 3), 3), (F(1, 2), 2)]
    assert superbasic_parts(Cocharacter([0, 0, 0])) == [(F(0), 1)] * 3
    with pytest.raises(NotANewtonPoint):
        superbasic_parts(Cocharacter([F(1, 2)] * 3))
    assert not is_newton_point(Cocharacter([F(1, 3), F(1, 3)]))


def test_polygon_vertices():
    p = polygon(Cocharacter([1, 0]))
    assert p.vertices == ((0, 0), (1, 1), (2, 1))
    flat = polygon(Cocharacter([0, 0, 0, 0]))
    assert flat.vertices == ((0, 0), (4, 0))
    assert p.value_at(F(3, 2)) == 1


def test_min_gap_examples():
    x = Cocharacter([1, 0])
    y = Cocharacter([F(1, 2), F(1, 2)])
    assert min_gap(x, x) == 0
    assert min_gap(x, y) == F(1, 2)


def test_polygon_overlay_gap_of_counterexample_slopes():
    mu = Cocharacter([2, -1, -1])
    nu = Cocharacter([0, 0, 0])
    assert polygon(mu).value_at(F(1)) - polygon(nu).value_at(F(1)) == 2
    assert min_gap(mu, nu) == 2


def test_min_gap_is_max_vertical_distance():
    rng = random.Random(2)
    for _ in range(60):
        n = rng.randint(2, 5)
        x = rand_cochar(rng, n)
        y = with_total(rand_cochar(rng, n), x.total())
        px, py = polygon(x), polygon(y)
        dense = max(abs(px.value_at(F(t, 7)) - py.value_at(F(t, 7)))
                    for t in range(0, 7 * n + 1))
        assert min_gap(x, y) == dense
        assert metric(x, y) >= min_gap(x, y)
        assert (metric(x, y) == 0) == (x == y)


def test_dominance_partial_order_properties():
    rng = random.Random(3)
    for _ in range(120):
        n = rng.randint(2, 4)
        x = rand_cochar(rng, n)
        y = with_total(rand_cochar(rng, n), x.total())
        z = with_total(rand_cochar(rng, n), x.total())
        assert dominates(x, x)
        if dominates(x, y) and dominates(y, x):
            assert x == y
        if dominates(x, y) and dominates(y, z):
            assert dominates(x, z)


def test_oplus_preserves_dominance():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(2, 4)
        x = rand_cochar(rng, n)
        y = with_total(rand_cochar(rng, n), x.total())
        z = rand_cochar(rng, n)
        if dominates(x, y):
            assert dominates(oplus(x, z), oplus(y, z))


def test_lcm_denominator():
    assert lcm_denominator(Cocharacter([F(1, 2), F(1, 3), 1])) == 6


def enumerate_newton_points(n, lo=-2, hi=2):
    """All valid slope vectors of length n with slopes in [lo, hi] and
    denominators at most n, built from superbasic blocks."""
    cands = sorted({F(h, d) for d in range(1, n + 1)
                    for h in range(lo * d, hi * d + 1)
                    if F(h, d).denominator == d}, reverse=True)

    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(Cocharacter(acc))
            return
        for i in range(start, len(cands)):
            s = cands[i]
            d = s.denominator
            mult = d
            while mult <= remaining:
                rec(i + 1, remaining - mult, acc + [s] * mult)
                mult += d

    rec(0, n, [])
    return out


def test_distinct_newton_points_separated_by_one_over_n():
    for n in range(2, 5):
        pts = enumerate_newton_points(n)
        by_total = {}
        for x in pts:
            by_total.setdefault(x.total(), []).append(x)
        for group in by_total.values():
            for a, b in itertools.combinations(group, 2):
                assert min_gap(a, b) >= F(1, n)
