from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fglab.boltzmann import (
    EnergeticSet,
    boltzmann_exp,
    boltzmann_fgl,
    ensemble_average_fgl,
    ensemble_mean_fgl,
    gibbs_series,
    level_law,
)
from fglab.fgl import fgl_check_axioms, fgl_gm, gm_exp
from fglab.powerseries import TruncatedSeries, series_exp
from fglab.prob_bridge import classical_cumulants
from fglab.symfun import wp_table

S = TruncatedSeries

levels = st.sets(st.fractions(min_value=Fraction(1, 4), max_value=6, max_denominator=4),
                 min_size=1, max_size=4).map(lambda s: EnergeticSet(sorted(s)))


def direct_exp(E, N):
    """Oracle: sum_i (1 - e^{lambda_i t}) built from series_exp."""
    total = S([0], N)
    for lam in E:
        total = total + (1 - series_exp(S([0, lam], N)))
    return total


def test_energetic_set_validation():
    assert EnergeticSet.parse("1,3/2,2") == (1, Fraction(3, 2), 2)
    for bad in ([], [0, 1], [2, 1], [1, 1], [-1]):
        with pytest.raises(ValueError):
            EnergeticSet(bad)


def test_boltzmann_exp_examples():
    E = EnergeticSet([1, 2])
    got = boltzmann_exp(E, 6)
    assert got == direct_exp(E, 6)
    assert got.coeffs[:4] == (0, -3, Fraction(-5, 2), Fraction(-3, 2))
    lam = Fraction(5, 3)
    assert boltzmann_exp(EnergeticSet([lam]), 6) == 1 - series_exp(S([0, lam], 6))
    sym = boltzmann_exp(None, 2)
    R = sym.ring
    assert sym.coeffs == (R.zero, -R.gen("p1"), -R.gen("p2") / 2)


def test_single_level_is_gm():
    for lam in (Fraction(1), Fraction(7, 3), Fraction(11)):
        assert boltzmann_fgl(EnergeticSet([lam]), 9).law == fgl_gm(9).law
    assert boltzmann_fgl(EnergeticSet([1]), 9).law.coeffs == fgl_gm(9).law.coeffs


def test_two_level_axioms():
    F = boltzmann_fgl(EnergeticSet([1, 2]), 8)
    assert F.exp[1] == -3
    assert fgl_check_axioms(F).passed


def test_gibbs_symbolic_order_three():
    g = gibbs_series(None, 3)
    R = g.symbolic.ring
    p1, p2, p3 = (R.gen(f"p{n}") for n in (1, 2, 3))
    assert g.symbolic.var == "x"
    assert g.symbolic.coeffs == (
        R.zero, p1, (p2 - p1 ** 2) / 2, (p3 - 3 * p1 * p2 + 2 * p1 ** 3) / 6,
    )


def test_gibbs_numeric_two_levels():
    g = gibbs_series(EnergeticSet([1, 2]), 6)
    assert g.numeric[2] == -2
    assert g.consistent()


def test_gibbs_normalized_order_three():
    g = gibbs_series(None, 3)
    W = wp_table(3)
    p1, w2, w3 = W.gen("p1"), W.gen("wp2"), W.gen("wp3")
    assert g.normalized[2] == (w2 - 1) * p1 ** 2 / 2
    assert g.normalized[3] == (w3 - 3 * w2 + 2) * p1 ** 3 / 6


@pytest.mark.parametrize("N", [4, 8])
def test_gibbs_matches_cumulant_polynomials(N):
    sym = gibbs_series(None, N).symbolic
    R = sym.ring
    m = [R.one] + [R.gen(f"p{n}") for n in range(1, N + 1)]
    k = classical_cumulants(m, N)
    for n in range(1, N + 1):
        assert sym[n] * factorial(n) == k[n]
        assert sym[n].is_homogeneous(n)


def test_ensemble_examples():
    G = fgl_gm(8)
    avg = ensemble_average_fgl([G, G])
    assert avg.exp == gm_exp(8) * 2
    assert avg.law.coeffs == {(1, 0): 1, (0, 1): 1, (1, 1): Fraction(-1, 2)}
    assert ensemble_average_fgl([G], [1]).law == G.law
    E = EnergeticSet([1, Fraction(5, 2), 4])
    assert ensemble_average_fgl([level_law(lam, 8) for lam in E]).law == boltzmann_fgl(E, 8).law


def test_ensemble_mean_variant():
    G = fgl_gm(6)
    assert ensemble_mean_fgl([G, G, G]).law == G.law
    assert ensemble_mean_fgl([G, G], [1, 3]).exp == G.exp


def test_ensemble_rejects_vanishing_linear_term():
    G = fgl_gm(6)
    with pytest.raises(ValueError):
        ensemble_average_fgl([G, G], [1, -1])
    with pytest.raises(ValueError):
        ensemble_average_fgl([G], [1, 2])


@settings(max_examples=15, deadline=None)
@given(levels)
def test_ensemble_equals_boltzmann(E):
    N = 6
    assert ensemble_average_fgl([level_law(lam, N) for lam in E]).law == boltzmann_fgl(E, N).law


@settings(max_examples=15, deadline=None)
@given(levels)
def test_gibbs_consistency(E):
    g = gibbs_series(E, 8)
    assert g.consistent()
    assert g.numeric == g.evaluate(E)


@settings(max_examples=10, deadline=None)
@given(levels)
def test_boltzmann_axioms(E):
    assert fgl_check_axioms(boltzmann_fgl(E, 6)).passed
