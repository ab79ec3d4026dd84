"""Random variables as formal group laws.

A random variable X with moment generating function M(t) gets the
exponential exp_F(t) = E[1 - e^{-tX}] = 1 - M(-t).  From it come the
cumulant series kappa_F = log_Gm o exp_F and the modulus
st_F = exp_Gm o log_F, which the two intertwining identities relate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence, Union

from .checks import Report, compare_series
from .coeff_ring import rational
from .fgl import FormalGroupLaw, fgl_from_exp, gm_exp, gm_log
from .powerseries import TruncatedSeries, series_compose, series_revert


@dataclass(frozen=True)
class FiniteSupport:
    atoms: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        atoms = tuple((rational(v), rational(w)) for v, w in self.atoms)
        if not atoms:
            raise ValueError("finite-support distribution needs at least one atom")
        if any(w <= 0 for _, w in atoms):
            raise ValueError("atom weights must be positive")
        if sum(w for _, w in atoms) != 1:
            raise ValueError("atom weights must sum to 1")
        object.__setattr__(self, "atoms", atoms)

    def literal(self) -> str:
        return "finite:" + ",".join(f"{v}@{w}" for v, w in self.atoms)


@dataclass(frozen=True)
class Poisson:
    mean: Fraction

    def __post_init__(self):
        mean = rational(self.mean)
        if mean <= 0:
            raise ValueError("Poisson mean must be positive")
        object.__setattr__(self, "mean", mean)

    def literal(self) -> str:
        return f"poisson:{self.mean}"


@dataclass(frozen=True)
class Bernoulli:
    p: Fraction

    def __post_init__(self):
        p = rational(self.p)
        if not 0 <= p <= 1:
            raise ValueError("Bernoulli parameter must lie in [0, 1]")
        object.__setattr__(self, "p", p)

    def literal(self) -> str:
        return f"bernoulli:{self.p}"


Distribution = Union[FiniteSupport, Poisson, Bernoulli]


def point_mass(value) -> FiniteSupport:
    return FiniteSupport(((rational(value), Fraction(1)),))


def parse_distribution(text: str) -> Distribution:
    """Read ``poisson:mu``, ``bernoulli:p`` or ``finite:v1@w1,v2@w2,...``."""
    kind, sep, body = text.partition(":")
    if not sep:
        raise ValueError(f"distribution literal {text!r} lacks a ':'")
    kind = kind.strip().lower()
    if kind == "poisson":
        return Poisson(rational(body))
    if kind == "bernoulli":
        return Bernoulli(rational(body))
    if kind == "finite":
        atoms = []
        for item in body.split(","):
            v, at, w = item.partition("@")
            if not at:
                raise ValueError(f"atom {item!r} should look like value@weight")
            atoms.append((rational(v), rational(w)))
        return FiniteSupport(tuple(atoms))
    raise ValueError(f"unknown distribution kind {kind!r}")


def moments(dist: Distribution, N: int) -> list[Fraction]:
    """Raw moments m_0 .. m_N (m_0 = 1)."""
    if N < 1:
        raise ValueError("need N >= 1")
    if isinstance(dist, FiniteSupport):
        return [sum((w * v ** n for v, w in dist.atoms), Fraction(0)) for n in range(N + 1)]
    if isinstance(dist, Bernoulli):
        return [Fraction(1)] + [dist.p] * N
    if isinstance(dist, Poisson):
        # m_{n+1} = mu * sum_k C(n, k) m_k
        m = [Fraction(1)]
        for n in range(N):
            m.append(dist.mean * sum(comb(n, k) * m[k] for k in range(n + 1)))
        return m
    raise TypeError(f"not a distribution: {dist!r}")


def mgf(dist: Distribution, N: int, var: str = "t") -> TruncatedSeries:
    """M(t) = sum m_n t^n / n!."""
    return TruncatedSeries(
        [m * Fraction(1, factorial(n)) for n, m in enumerate(moments(dist, N))], N, var
    )


def exp_of_distribution(dist: Distribution, N: int) -> TruncatedSeries:
    """E[1 - e^{-tX}] = 1 - M(-t)."""
    m = moments(dist, N)
    return TruncatedSeries(
        [0] + [-m[n] * Fraction((-1) ** n, factorial(n)) for n in range(1, N + 1)], N
    )


def fgl_of_distribution(dist: Distribution, N: int) -> FormalGroupLaw:
    exp_series = exp_of_distribution(dist, N)
    if exp_series[1] == 0:
        raise ValueError(
            "distribution has zero mean: the exponential has no invertible linear term, "
            "so it does not define a formal group law"
        )
    return fgl_from_exp(exp_series)


def kappa(dist: Distribution, N: int) -> TruncatedSeries:
    """kappa_F = log_Gm o exp_F."""
    F = fgl_of_distribution(dist, N)
    return series_compose(gm_log(N), F.exp)


def st_modulus(dist: Distribution, N: int) -> TruncatedSeries:
    """st_F = exp_Gm o log_F."""
    F = fgl_of_distribution(dist, N)
    return series_compose(gm_exp(N), F.log)


def verify_intertwining(dist: Distribution, N: int) -> Report:
    """Check kappa = log_Gm o st^-1 o exp_Gm and st = exp_Gm o kappa^-1 o log_Gm."""
    k = kappa(dist, N)
    st = st_modulus(dist, N)
    lhs_k = series_compose(gm_log(N), series_compose(series_revert(st), gm_exp(N)))
    lhs_st = series_compose(gm_exp(N), series_compose(series_revert(k), gm_log(N)))
    return Report((
        compare_series("kappa = log_Gm o st^-1 o exp_Gm", k, lhs_k),
        compare_series("st = exp_Gm o kappa^-1 o log_Gm", st, lhs_st),
    ))


def classical_cumulants(m: Sequence, N: int | None = None) -> list:
    """kappa_1..kappa_N from raw moments via kappa_n = m_n - sum C(n-1,k-1) kappa_k m_{n-k}.

    Works over any ring; ``m[0]`` is taken to be 1.  Index 0 of the result is 0.
    """
    N = len(m) - 1 if N is None else N
    zero = m[1] * 0
    k = [zero]
    for n in range(1, N + 1):
        s = m[n]
        for j in range(1, n):
            s = s - k[j] * m[n - j] * comb(n - 1, j - 1)
        k.append(s)
    return k
