from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fglab.fgl import fgl_gm, gm_exp, gm_log
from fglab.powerseries import TruncatedSeries, series_compose, series_exp, series_scale_argument
from fglab.prob_bridge import (
    Bernoulli,
    FiniteSupport,
    Poisson,
    classical_cumulants,
    exp_of_distribution,
    fgl_of_distribution,
    kappa,
    mgf,
    moments,
    parse_distribution,
    point_mass,
    st_modulus,
    verify_intertwining,
)

from strategies import small_rationals

S = TruncatedSeries
N = 10


def set_partitions(n):
    """Enumerate partitions of {0..n-1} (brute force)."""
    if n == 0:
        yield []
        return
    for part in set_partitions(n - 1):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [n - 1]] + part[i + 1:]
        yield part + [[n - 1]]


def test_poisson_moments_are_bell_numbers():
    bell = [sum(1 for _ in set_partitions(n)) for n in range(7)]
    assert moments(Poisson(1), 6) == bell
    assert moments(Poisson(1), 4)[1:] == [1, 2, 5, 15]


def test_poisson_moments_touchard():
    # m_n = sum_k S(n,k) mu^k, Stirling numbers counted from set partitions
    mu = Fraction(2, 3)
    expected = [sum(mu ** len(p) for p in set_partitions(n)) for n in range(7)]
    assert moments(Poisson(mu), 6) == expected


def test_simple_moments():
    assert moments(Bernoulli(Fraction(1, 2)), 3)[3] == Fraction(1, 2)
    assert moments(FiniteSupport(((1, Fraction(1, 2)), (2, Fraction(1, 2)))), 2)[2] == Fraction(5, 2)


def test_mgf_examples():
    p = Fraction(1, 3)
    assert mgf(Bernoulli(p), N) == 1 - p + series_exp(S([0, 1], N)) * p
    assert mgf(Poisson(1), N) == series_exp(series_exp(S([0, 1], N)) - 1)
    c = Fraction(-5, 2)
    assert mgf(point_mass(c), N) == series_exp(S([0, c], N))


def test_invalid_parameters():
    with pytest.raises(ValueError):
        Poisson(0)
    with pytest.raises(ValueError):
        Bernoulli(Fraction(3, 2))
    with pytest.raises(ValueError):
        FiniteSupport(((1, Fraction(1, 2)),))
    with pytest.raises(ValueError):
        FiniteSupport(((1, Fraction(3, 2)), (2, Fraction(-1, 2))))


def test_zero_mean_rejected():
    with pytest.raises(ValueError, match="zero mean"):
        fgl_of_distribution(FiniteSupport(((1, Fraction(1, 2)), (-1, Fraction(1, 2)))), N)
    with pytest.raises(ValueError, match="zero mean"):
        fgl_of_distribution(Bernoulli(0), N)


def test_negative_mean_allowed():
    F = fgl_of_distribution(point_mass(-2), N)
    assert F.exp[1] == -2
    assert verify_intertwining(point_mass(-2), N).passed


def test_parse_distribution():
    assert parse_distribution("poisson:3/2") == Poisson(Fraction(3, 2))
    assert parse_distribution("bernoulli:1/4") == Bernoulli(Fraction(1, 4))
    d = parse_distribution("finite:1@1/2,2@1/2")
    assert d.atoms == ((1, Fraction(1, 2)), (2, Fraction(1, 2)))
    assert parse_distribution(d.literal()) == d
    for bad in ("poisson", "gamma:1", "finite:1"):
        with pytest.raises(ValueError):
            parse_distribution(bad)


def test_bernoulli_law():
    # exp_F = p(1 - e^{-t}); direct expansion p(1 - (1 - x/p)(1 - y/p)) = x + y - xy/p
    assert fgl_of_distribution(Bernoulli(1), 12).law == fgl_gm(12).law
    p = Fraction(2, 7)
    F = fgl_of_distribution(Bernoulli(p), N)
    assert F.exp == gm_exp(N) * p
    assert F.law.coeffs == {(1, 0): 1, (0, 1): 1, (1, 1): -1 / p}


def test_point_mass_is_gm():
    F = fgl_of_distribution(point_mass(1), N)
    assert F.exp == gm_exp(N)
    assert F.law == fgl_gm(N).law


def test_poisson_exponential():
    mu = Fraction(3, 4)
    expected = series_compose(gm_exp(N), gm_exp(N) * mu)
    assert exp_of_distribution(Poisson(mu), N) == expected


def test_kappa_examples():
    mu = Fraction(5, 3)
    assert kappa(Poisson(mu), N) == gm_exp(N) * mu
    # log_Gm o exp_Gm is the identity: the only nonzero cumulant of X = 1 is kappa_1 = 1
    assert kappa(point_mass(1), N) == S.variable(N)


def test_st_examples():
    assert st_modulus(Poisson(1), 12) == gm_log(12)
    assert st_modulus(point_mass(1), N) == S.variable(N)
    p = Fraction(3, 5)
    assert st_modulus(Bernoulli(p), N) == S.variable(N) * (1 / p)


def test_linear_coefficients():
    d = FiniteSupport(((3, Fraction(1, 2)), (-1, Fraction(1, 2))))
    m1 = moments(d, 1)[1]
    assert kappa(d, N)[1] == m1
    assert st_modulus(d, N)[1] == 1 / m1


@pytest.mark.parametrize("dist", [Poisson(1), Bernoulli(Fraction(1, 2))], ids=["poisson", "bernoulli"])
def test_intertwining_named(dist):
    rep = verify_intertwining(dist, 12)
    assert rep.passed and len(rep.checks) == 2


def test_intertwining_reports_discrepancy():
    from fglab.checks import compare_series

    c = compare_series("x", gm_exp(5), gm_log(5))
    assert not c.passed and c.first_discrepancy["degree"] == 2


finite_dists = st.lists(
    st.tuples(small_rationals, st.integers(1, 6)), min_size=1, max_size=4
).map(lambda atoms: FiniteSupport(tuple((v, Fraction(w, sum(x for _, x in atoms))) for v, w in atoms))
  ).filter(lambda d: moments(d, 1)[1] != 0)


@settings(max_examples=25, deadline=None)
@given(finite_dists)
def test_intertwining_random(dist):
    assert verify_intertwining(dist, N).passed


@settings(max_examples=25, deadline=None)
@given(finite_dists)
def test_cumulant_dictionary(dist):
    k = kappa(dist, N)
    classical = classical_cumulants(moments(dist, N))
    for n in range(1, N + 1):
        assert k[n] * factorial(n) == (-1) ** (n + 1) * classical[n]


@settings(max_examples=25, deadline=None)
@given(finite_dists)
def test_exponential_two_paths(dist):
    assert exp_of_distribution(dist, N) == 1 - series_scale_argument(mgf(dist, N), -1)


def test_classical_cumulants_of_poisson():
    mu = Fraction(7, 2)
    assert classical_cumulants(moments(Poisson(mu), 8))[1:] == [mu] * 8
