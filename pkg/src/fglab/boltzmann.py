"""Energetic sets, the Boltzmann formal group law and the Gibbs series.

An energetic set is a finite strictly increasing list of positive levels
lambda_1 < ... < lambda_l.  Its Boltzmann law has exponential

    exp_BE(t) = sum_i (1 - e^{lambda_i t}) = -sum_n p_n(lambda) t^n / n!

and the Gibbs series is Omega(x) = -log_Gm(exp_BE(x)) = log(1 + sum p_n x^n / n!),
whose coefficients are the cumulant polynomials with moments replaced by
power sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .coeff_ring import GradedPolynomial, rational
from .fgl import FormalGroupLaw, fgl_from_exp, gm_exp
from .powerseries import TruncatedSeries, series_log, series_scale_argument
from .symfun import basis_table, normalize_wp, power_sum, symbolic_series_at, wp_table


class EnergeticSet(tuple):
    """Levels 0 < lambda_1 < ... < lambda_l, exact and finite."""

    def __new__(cls, levels: Iterable):
        levels = tuple(rational(v) for v in levels)
        if not levels:
            raise ValueError("an energetic set needs at least one level")
        if levels[0] <= 0:
            raise ValueError("energy levels must be positive")
        if any(a >= b for a, b in zip(levels, levels[1:])):
            raise ValueError("energy levels must be strictly increasing")
        return super().__new__(cls, levels)

    @classmethod
    def parse(cls, text: str) -> EnergeticSet:
        """Read a comma-separated list such as ``"1,3/2,2"``."""
        return cls(part for part in text.split(",") if part.strip())

    @property
    def levels(self) -> tuple[Fraction, ...]:
        return tuple(self)

    def power_sum(self, n: int) -> Fraction:
        return power_sum(self, n)

    def __repr__(self):
        return f"EnergeticSet({', '.join(str(v) for v in self)})"


def boltzmann_exp(E: EnergeticSet | None, N: int) -> TruncatedSeries:
    """-sum p_n t^n / n!, numeric for an energetic set, over Q[p_*] when E is None."""
    if N < 1:
        raise ValueError("need N >= 1")
    if E is None:
        ring = basis_table("p", N)
        return TruncatedSeries(
            [ring.zero] + [ring.gen(f"p{n}") * Fraction(-1, factorial(n)) for n in range(1, N + 1)],
            N, "t", ring,
        )
    return TruncatedSeries(
        [0] + [-E.power_sum(n) * Fraction(1, factorial(n)) for n in range(1, N + 1)], N
    )


def boltzmann_fgl(E: EnergeticSet, N: int) -> FormalGroupLaw:
    return fgl_from_exp(boltzmann_exp(E, N))


@dataclass(frozen=True, eq=False)
class GibbsSeries:
    """Omega in the variable x, numerically (if levels were given) and symbolically.

    ``normalized`` rewrites each symbolic coefficient through p_n = wp_n p_1^n,
    so [x^n] is a polynomial in wp_2, wp_3, ... times p_1^n.
    """

    order: int
    symbolic: TruncatedSeries
    normalized: TruncatedSeries
    numeric: TruncatedSeries | None = None
    levels: EnergeticSet | None = None

    def evaluate(self, E: Sequence) -> TruncatedSeries:
        return symbolic_series_at(self.symbolic, E)

    def consistent(self) -> bool:
        if self.numeric is None:
            return True
        return self.evaluate(self.levels) == self.numeric


def _gibbs_from_exp(exp_series: TruncatedSeries) -> TruncatedSeries:
    # -log_Gm(y) = log(1 - y)
    return series_log(1 - exp_series)


def gibbs_series(E: EnergeticSet | None, N: int) -> GibbsSeries:
    symbolic = _gibbs_from_exp(boltzmann_exp(None, N)).with_var("x")
    normalized = TruncatedSeries(
        [normalize_wp(c, N) for c in symbolic.coeffs], N, "x", wp_table(N)
    )
    numeric = None
    if E is not None:
        numeric = _gibbs_from_exp(boltzmann_exp(E, N)).with_var("x")
    return GibbsSeries(N, symbolic, normalized, numeric, E)


def gibbs_coefficient(poly: GradedPolynomial, n: int) -> GradedPolynomial:
    """n! times a coefficient: the cumulant-polynomial normalization."""
    return poly * factorial(n)


def ensemble_average_fgl(
    laws: Sequence[FormalGroupLaw],
    weights: Sequence | None = None,
    N: int | None = None,
) -> FormalGroupLaw:
    """Law whose exponential is the weighted sum of the members' exponentials.

    Unit weights by default, which reproduces the Boltzmann construction from
    rescaled multiplicative laws.
    """
    if not laws:
        raise ValueError("empty ensemble")
    if weights is None:
        weights = [1] * len(laws)
    if len(weights) != len(laws):
        raise ValueError("one weight per law")
    N = min(F.order for F in laws) if N is None else N
    total = None
    for F, w in zip(laws, weights):
        term = F.exp.truncate(N) * rational(w)
        total = term if total is None else total + term
    if not total.ring.is_unit(total[1]):
        raise ValueError("aggregate linear coefficient of the ensemble is not invertible")
    return fgl_from_exp(total)


def ensemble_mean_fgl(
    laws: Sequence[FormalGroupLaw],
    weights: Sequence | None = None,
    N: int | None = None,
) -> FormalGroupLaw:
    """As :func:`ensemble_average_fgl` but with weights divided by their sum."""
    if weights is None:
        weights = [1] * len(laws)
    weights = [rational(w) for w in weights]
    s = sum(weights)
    if s == 0:
        raise ValueError("weights sum to zero")
    return ensemble_average_fgl(laws, [w / s for w in weights], N)


def level_law(level, N: int) -> FormalGroupLaw:
    """Multiplicative law with argument scaled by -level: exponential 1 - e^{level t}."""
    return fgl_from_exp(series_scale_argument(gm_exp(N), -rational(level)))
