from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fglab.coeff_ring import GeneratorTable
from fglab.powerseries import (
    MultiSeries,
    TruncatedSeries,
    bivariate_substitute,
    divided_power,
    lagrange_inversion,
    series_compose,
    series_exp,
    series_log,
    series_mul,
    series_revert,
    series_scale_argument,
)

from strategies import coordinates, series

S = TruncatedSeries


def naive_revert(f):
    """Oracle: fix g_d so that [t^d] f(g) vanishes, recomposing from scratch each time."""
    N = f.order
    g = [Fraction(0), 1 / f[1]] + [Fraction(0)] * (N - 1)
    for d in range(2, N + 1):
        residual = series_compose(f.truncate(d), S(g[: d + 1], d))[d]
        g[d] = -residual / f[1]
    return S(g, N)


def test_mul_examples():
    assert series_mul(S([1, 1], 4), S([1, -1], 4)) == S([1, 0, -1], 4)
    assert series_mul(S([1] * 7, 6), S([1, -1], 6)) == S([1], 6)
    assert series_mul(S([0, 1, 1], 5), S([0, 1], 5)) == S([0, 0, 1, 1], 5)


def test_mul_takes_min_order():
    assert (S([1, 1], 3) * S([1, 1], 7)).order == 3


def test_mismatch_errors():
    with pytest.raises(ValueError):
        S([1], 3) * S([1], 3, var="x")
    R = GeneratorTable([("p1", 1)])
    with pytest.raises(ValueError):
        S([1], 3) * S([1], 3, ring=R)


def test_beyond_order_is_an_error():
    with pytest.raises(IndexError):
        S([1, 2], 3)[4]


def test_compose_examples():
    geo = S([1] * 9, 8)
    assert series_compose(geo, S([0, 2], 8)) == S([2 ** n for n in range(9)], 8)
    f = S([3, 1, -2, 5], 6)
    assert series_compose(f, S.variable(6)) == f
    with pytest.raises(ValueError):
        series_compose(f, S([1, 1], 6))


def test_catalan_reversion():
    expected = S([0] + [comb(2 * n - 2, n - 1) // n for n in range(1, 13)], 12)
    f = S([0, 1, -1], 12)
    g = series_revert(f)
    assert g.coeffs[:6] == (0, 1, 1, 2, 5, 14)
    assert g == expected == naive_revert(f) == lagrange_inversion(f)
    assert series_compose(f, g) == S.variable(12)


def test_revert_identity_and_errors():
    assert series_revert(S.variable(7)) == S.variable(7)
    with pytest.raises(ValueError):
        series_revert(S([0, 0, 1], 5))
    with pytest.raises(ValueError):
        series_revert(S([1, 1], 5))


def test_revert_mercator_gives_gm_exponential():
    N = 10
    neg_log = S([0] + [Fraction(1, n) for n in range(1, N + 1)], N)
    one_minus_exp = 1 - series_exp(S([0, -1], N))
    assert series_revert(neg_log) == one_minus_exp


def test_exp_log_examples():
    assert series_exp(S([0, 1], 8)) == S([Fraction(1, factorial(n)) for n in range(9)], 8)
    assert series_log(S([1, 1], 8)) == S([0] + [Fraction((-1) ** (n + 1), n) for n in range(1, 9)], 8)
    assert series_exp(series_log(S([1, 1, 1], 8))) == S([1, 1, 1], 8)
    with pytest.raises(ValueError):
        series_exp(S([1, 1], 3))
    with pytest.raises(ValueError):
        series_log(S([2, 1], 3))


def test_divided_power_examples():
    t = S.variable(6)
    assert divided_power(t, 2) == S([0, 0, Fraction(1, 2)], 6)
    assert divided_power(S([0, 3, 1], 6), 0) == S([1], 6)
    assert divided_power(t * 2, 3) == S([0, 0, 0, Fraction(4, 3)], 6)


def test_scale_argument_examples():
    N, lam = 6, Fraction(3, 2)
    gm_exp = 1 - series_exp(S([0, -1], N))
    expected = 1 - series_exp(S([0, lam], N))
    assert series_scale_argument(gm_exp, -lam) == expected
    assert series_scale_argument(gm_exp, 1) == gm_exp
    assert series_scale_argument(S([0, 0, 1], 4), 2) == S([0, 0, 4], 4)


def test_bivariate_examples():
    N = 6
    F = MultiSeries(("x", "y"), N, {(1, 0): 1, (0, 1): 1, (1, 1): -1})
    x = S.variable(N, "x")
    unit = F.substitute(x, S([0], N, "y"))
    assert {k: v for k, v in unit.coeffs.items()} == {(1, 0): 1}

    add = MultiSeries(("x", "y"), N, {(1, 0): 1, (0, 1): 1})
    xyz = ("x", "y", "z")
    fyz = add.substitute(S.variable(N, "y"), S.variable(N, "z"))
    total = bivariate_substitute(add, x, fyz)
    assert total.vars == xyz
    assert total.coeffs == {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}

    # multiplicative law: both association orders expanded by hand equal
    # x + y + z - xy - xz - yz + xyz
    X, Y, Z = (MultiSeries.gen(v, xyz, N) for v in xyz)
    left = bivariate_substitute(F, bivariate_substitute(F, X, Y), Z)
    right = bivariate_substitute(F, X, bivariate_substitute(F, Y, Z))
    expected = {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1, (1, 1, 0): -1, (1, 0, 1): -1,
                (0, 1, 1): -1, (1, 1, 1): 1}
    assert left.coeffs == right.coeffs == expected
    with pytest.raises(ValueError):
        bivariate_substitute(F, S([1, 1], N, "x"), S.variable(N, "y"))


def test_json_roundtrip():
    f = S([0, 1, Fraction(-1, 2)], 4)
    assert f.to_json() == {"var": "t", "order": 4, "coeffs": ["0/1", "1/1", "-1/2", "0/1", "0/1"]}
    assert S.from_json(f.to_json()) == f
    F = MultiSeries(("x", "y"), 3, {(1, 0): 1, (0, 1): 1, (1, 1): Fraction(-1, 3)})
    data = F.to_json()
    assert data["coeffs"] == [[1, 0, "1/1"], [0, 1, "1/1"], [1, 1, "-1/3"]]
    assert MultiSeries.from_json(data) == F


@settings(max_examples=60, deadline=None)
@given(coordinates(unit=False))
def test_reversion_roundtrip(f):
    g = series_revert(f)
    t = S.variable(f.order)
    assert series_compose(f, g) == t
    assert series_compose(g, f) == t


@settings(max_examples=30, deadline=None)
@given(coordinates(max_order=9, unit=False))
def test_reversion_matches_lagrange(f):
    assert series_revert(f) == lagrange_inversion(f) == naive_revert(f)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10).flatmap(lambda n: st.tuples(series(n, constant=0), series(n, constant=1))))
def test_exp_log_inverse(pair):
    h, u = pair
    assert series_log(series_exp(h)) == h
    assert series_exp(series_log(u)) == u


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 8).flatmap(
    lambda n: st.tuples(series(n), series(n, constant=0), series(n, constant=0))))
def test_compose_associative(triple):
    f, g, h = triple
    assert series_compose(series_compose(f, g), h) == series_compose(f, series_compose(g, h))


@given(series(), st.integers(0, 5))
def test_divided_power_times_factorial(f, k):
    assert divided_power(f, k) * factorial(k) == f ** k
