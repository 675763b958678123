import itertools
from fractions import Fraction

import pytest

from isolab import laurent as ls
from isolab.cochar import Cocharacter, dominates
from isolab.coeffs import field_make
from isolab.errors import BadHodgeProfile, DegreeTooSmall, InvalidParams, RangeError
from isolab.invariants import hodge_point, newton_point
from isolab.matl import MatL
from isolab.resgroups import (DisplayParams, GOType, ResElement, ag_display,
                              ag_invariants, ag_lambda, base_change_check, go_beta,
                              go_generic_matrix, go_lambda, go_type, res_hodge,
                              res_newton, res_shift, res_twisted_power)
from isolab.sampling import rand_matrix, rng_for

F = Fraction
F4 = field_make(2, 2)
F9 = field_make(3, 2)


def C(*slopes):
    return Cocharacter(slopes)


def diag(ctx, a, b):
    return MatL(ctx, [[ls.monomial(ctx, a), ls.zero(ctx)],
                      [ls.zero(ctx), ls.monomial(ctx, b)]])


def antidiag(ctx, a, b):
    return MatL(ctx, [[ls.zero(ctx), ls.monomial(ctx, a)],
                      [ls.monomial(ctx, b), ls.zero(ctx)]])


def remark_triple(ctx):
    return ResElement(ctx, [diag(ctx, 1, 0), antidiag(ctx, 0, 1), diag(ctx, 0, 1)])


def test_res_twisted_power_identity_cases():
    b = ResElement(F4, [diag(F4, 1, 0), diag(F4, 1, 0)])
    assert res_twisted_power(b, 1) == b
    sq = res_twisted_power(b, 2)
    assert all(p == diag(F4, 2, 0) for p in sq.parts)
    assert res_hodge(sq) == [C(2, 0), C(2, 0)]

    c = ResElement(F4, [antidiag(F4, 0, 1), antidiag(F4, 0, 1)])
    csq = res_twisted_power(c, 2)
    assert all(p == diag(F4, 1, 1) for p in csq.parts)


def test_res_newton_constant_tuple():
    b = ResElement(F4, [diag(F4, 1, 0), diag(F4, 1, 0)])
    assert res_newton(b) == C(1, 0)


def test_res_newton_remark_triple():
    b = remark_triple(F4)
    assert res_newton(b) == C(F(1, 2), F(1, 2))


def test_res_newton_invariant_under_relabeling():
    b = remark_triple(F9)
    for k in range(3):
        assert res_newton(res_shift(b, k)) == C(F(1, 2), F(1, 2))


def test_res_newton_matches_full_twisted_power():
    rng = rng_for(23, "res-consistency")
    for g in (1, 2, 3, 4):
        for _ in range(10):
            parts = [rand_matrix(F9, rng, 2, -1, 1) for _ in range(g)]
            b = ResElement(F9, parts)
            full = res_twisted_power(b, g)
            assert res_newton(b) == newton_point(full.parts[0]).scaled(F(1, g))


def test_go_type_trivial_cases():
    b = ResElement(F4, [diag(F4, 1, 0)] * 3)
    assert go_type(b) == GOType(3, frozenset())
    c = ResElement(F4, [antidiag(F4, 0, 1)] * 3)
    assert go_type(c) == GOType(3, frozenset({0, 1, 2}))


def test_go_type_remark_triple():
    b = remark_triple(F4)
    sq = res_twisted_power(b, 2)
    assert res_hodge(sq) == [C(1, 1), C(2, 0), C(2, 0)]
    assert go_type(b) == GOType(3, frozenset({0}))


def test_go_type_requires_hodge_profile():
    b = ResElement(F4, [diag(F4, 2, 0)])
    with pytest.raises(BadHodgeProfile):
        go_type(b)


def test_square_components_are_central_or_ordinary():
    rng = rng_for(20, "profile")
    from isolab.matl import mat_mul
    from isolab.sampling import rand_unit_matrix
    base = diag(F4, 1, 0)
    for _ in range(20):
        g = rng.randint(1, 4)
        parts = [mat_mul(mat_mul(rand_unit_matrix(F4, rng, 2), base),
                         rand_unit_matrix(F4, rng, 2)) for _ in range(g)]
        b = ResElement(F4, parts)
        for mu in res_hodge(res_twisted_power(b, 2)):
            assert mu in (C(1, 1), C(2, 0))


def spaced_oracle(members, g):
    best = 0
    members = sorted(members)
    for r in range(len(members), -1, -1):
        for sub in itertools.combinations(members, r):
            if all((i + 1) % g not in sub for i in sub):
                return r
    return best


def test_go_lambda_examples():
    assert go_lambda(GOType(3, frozenset({0, 1, 2}))) == F(1, 2)
    assert go_lambda(GOType(4, frozenset())) == 0
    assert go_lambda(GOType(4, frozenset({0, 1, 2, 3}))) == F(1, 2)
    assert go_lambda(GOType(5, frozenset({0, 1, 3}))) == F(2, 5)
    assert go_lambda(GOType(1, frozenset({0}))) == F(1, 2)


def test_go_lambda_matches_spaced_oracle():
    for g in range(1, 6):
        for r in range(g + 1):
            for members in itertools.combinations(range(g), r):
                tau = GOType(g, frozenset(members))
                if g % 2 == 1 and len(members) == g:
                    assert go_lambda(tau) == F(1, 2)
                else:
                    assert go_lambda(tau) == F(spaced_oracle(members, g), g)


def test_go_generic_matrix_type_and_newton():
    for g in range(1, 5):
        for r in range(g + 1):
            for members in itertools.combinations(range(g), r):
                tau = GOType(g, frozenset(members))
                b = go_generic_matrix(F9, tau, seed=3)
                assert res_hodge(b) == [C(1, 0)] * g
                assert go_type(b) == tau
                assert res_newton(b) == go_beta(tau)


def test_go_generic_newton_dominated_by_beta():
    rng = rng_for(21, "beta-bound")
    for g in (2, 3, 4):
        for members in [frozenset(), frozenset({0}), frozenset(range(g))]:
            tau = GOType(g, members)
            for s in range(5):
                b = go_generic_matrix(F9, tau, seed=s)
                assert dominates(res_newton(b), go_beta(tau))


def test_go_generic_degree_too_small():
    f2 = field_make(2, 1)
    with pytest.raises(DegreeTooSmall):
        go_generic_matrix(f2, GOType(3, frozenset()), seed=0)


def test_ag_display_fixture():
    params = DisplayParams(g=2, i=1, j=1, m=1)
    Fm = ag_display(F4, params)
    T = ls.monomial(F4, 1)
    assert Fm == MatL(F4, [[T, T], [T, ls.zero(F4)]])
    assert hodge_point(Fm) == C(1, 1)


def test_ag_display_min_slope_cases():
    Fm = ag_display(F4, DisplayParams(g=2, i=2, j=0, m=0))
    assert Fm == MatL(F4, [[ls.one(F4), ls.monomial(F4, 2)],
                           [ls.one(F4), ls.zero(F4)]])
    assert hodge_point(Fm) == C(2, 0)


def test_ag_display_validation():
    with pytest.raises(InvalidParams):
        DisplayParams(g=2, i=1, j=2, m=2)
    with pytest.raises(InvalidParams):
        DisplayParams(g=3, i=2, j=1, m=0)  # m < j
    with pytest.raises(InvalidParams):
        DisplayParams(g=2, i=1, j=1, m=1, c=ls.monomial(F4, 1))  # non-unit


def test_ag_invariants_cases():
    assert ag_invariants(ag_display(F4, DisplayParams(g=2, i=1, j=1, m=1))) == (1, 1)
    assert ag_invariants(ag_display(F4, DisplayParams(g=2, i=2, j=0, m=0))) == (0, 0)
    assert ag_invariants(ag_display(F4, DisplayParams(g=3, i=2, j=1, m=1))) == (1, 1)


def test_ag_lambda():
    assert ag_lambda(0, 4) == 0
    assert ag_lambda(4, 4) == F(1, 2)
    assert ag_lambda(1, 3) == F(1, 3)
    with pytest.raises(RangeError):
        ag_lambda(5, 4)


def test_ag_newton_small_grid():
    for g in (2, 3, 4):
        for j in range(0, g // 2 + 1):
            i = g - j
            for m in range(j, g + 2):
                params = DisplayParams(g=g, i=i, j=j, m=m)
                Fm = ag_display(F9, params)
                jj, nn = ag_invariants(Fm)
                assert (jj, nn) == (j, min(m, i))
                lam = ag_lambda(nn, g)
                nu = newton_point(Fm).scaled(F(1, g))
                assert nu == C(1 - lam, lam)


def test_base_change_examples():
    b = diag(F4, 1, 0)
    rep = base_change_check(b, 2)
    assert rep["hodge_rebased"] == C(2, 0)
    assert rep["newton_rebased"] == C(2, 0)
    assert rep["exact_scaling"]
    assert base_change_check(b, 1)["exact_scaling"]

    from isolab.invariants import minimal_element
    bmin = minimal_element(F4, C(F(1, 2), F(1, 2)))
    rep2 = base_change_check(bmin, 2)
    assert rep2["newton_rebased"] == C(1, 1)
    assert rep2["exact_scaling"]


def test_base_change_random_matrices():
    rng = rng_for(22, "basechange")
    for _ in range(30):
        n = rng.randint(2, 3)
        b = rand_matrix(F4, rng, n, -2, 2)
        for e in (2, 3):
            assert base_change_check(b, e)["exact_scaling"]
