"""Symmetric-function generating functions and Newton's identities.

Symbolic symmetric functions are :class:`GradedPolynomial` values over
generators ``p1, p2, ...`` (power sums), ``e1, ...`` (elementary) or
``h1, ...`` (complete homogeneous), each of weight n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .coeff_ring import QQ, GeneratorTable, GradedPolynomial, rational
from .powerseries import TruncatedSeries, series_exp

BASES = ("p", "e", "h")


class Alphabet(tuple):
    """A finite list of exact rationals x_1, ..., x_k."""

    def __new__(cls, values: Iterable = ()):
        return super().__new__(cls, (rational(v) for v in values))

    def __repr__(self):
        return f"Alphabet({', '.join(str(v) for v in self)})"


@lru_cache(maxsize=None)
def basis_table(kind: str, degree: int) -> GeneratorTable:
    """Generators ``kind1 .. kind<degree>`` for kind in p, e, h."""
    if kind not in BASES:
        raise ValueError(f"unknown basis {kind!r}")
    return GeneratorTable((f"{kind}{n}", n) for n in range(1, degree + 1))


@lru_cache(maxsize=None)
def wp_table(degree: int) -> GeneratorTable:
    """p1 together with wp2..wp<degree>, wp_n = p_n / p_1^n (weight 0)."""
    return GeneratorTable([("p1", 1)] + [(f"wp{n}", 0) for n in range(2, degree + 1)])


@lru_cache(maxsize=None)
def wl_table(degree: int) -> GeneratorTable:
    """p1 together with wl2..wl<degree>, wl_n = p_n / p_1 (weight n - 1)."""
    return GeneratorTable([("p1", 1)] + [(f"wl{n}", n - 1) for n in range(2, degree + 1)])


def power_sum(alphabet: Sequence, n: int) -> Fraction:
    if n < 1:
        raise ValueError("power sums are indexed from 1")
    return sum((rational(x) ** n for x in alphabet), Fraction(0))


def gen_E(alphabet: Sequence, order: int, var: str = "t") -> TruncatedSeries:
    """E(t) = prod (1 + x_i t)."""
    out = TruncatedSeries.constant(1, order, var)
    for x in alphabet:
        out = out * TruncatedSeries([1, rational(x)], order, var)
    return out


def gen_H(alphabet: Sequence, order: int, var: str = "t") -> TruncatedSeries:
    """H(t) = 1 / E(-t)."""
    E = gen_E(alphabet, order, var)
    E_neg = TruncatedSeries([c * (-1) ** n for n, c in enumerate(E.coeffs)], order, var)
    return E_neg.reciprocal()


def gen_P(alphabet: Sequence, order: int, var: str = "t") -> TruncatedSeries:
    """P(t) = H'(t) / H(t) = sum_{r >= 1} p_r t^{r-1}."""
    H = gen_H(alphabet, order + 1, var)
    return H.derivative() * H.truncate(order).reciprocal()


def h_from_p(order: int, var: str = "t") -> TruncatedSeries:
    """H(t) = exp(sum p_n t^n / n) over Q[p_1..p_order]."""
    ring = basis_table("p", order)
    inner = TruncatedSeries(
        [ring.zero] + [ring.gen(f"p{n}") * Fraction(1, n) for n in range(1, order + 1)],
        order, var, ring,
    )
    return series_exp(inner)


def evaluate_at(poly: GradedPolynomial, alphabet: Sequence) -> Fraction:
    """Evaluate a p-basis polynomial at the power sums of an alphabet."""
    values = {}
    for name in poly.table.names:
        if not name.startswith("p"):
            raise ValueError(f"evaluate_at expects power sums, got {name!r}")
        values[name] = power_sum(alphabet, int(name[1:]))
    return poly.substitute(values).constant_term()


# Newton recurrences.  Each list is indexed from 1; entry n expresses the
# degree-n generator of one basis in another.

@lru_cache(maxsize=None)
def _e_in_p(degree: int) -> tuple[GradedPolynomial, ...]:
    # n e_n = sum_{i=1}^n (-1)^{i-1} e_{n-i} p_i
    R = basis_table("p", degree)
    e = [R.one]
    for n in range(1, degree + 1):
        s = R.zero
        for i in range(1, n + 1):
            s = s + e[n - i] * R.gen(f"p{i}") * (-1) ** (i - 1)
        e.append(s * Fraction(1, n))
    return tuple(e)


@lru_cache(maxsize=None)
def _h_in_p(degree: int) -> tuple[GradedPolynomial, ...]:
    # n h_n = sum_{i=1}^n h_{n-i} p_i
    R = basis_table("p", degree)
    h = [R.one]
    for n in range(1, degree + 1):
        s = R.zero
        for i in range(1, n + 1):
            s = s + h[n - i] * R.gen(f"p{i}")
        h.append(s * Fraction(1, n))
    return tuple(h)


@lru_cache(maxsize=None)
def _p_in(kind: str, degree: int) -> tuple[GradedPolynomial, ...]:
    # e: p_n = sum_{i=1}^{n-1} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n
    # h: p_n = n h_n - sum_{i=1}^{n-1} h_i p_{n-i}
    R = basis_table(kind, degree)
    p = [None]
    for n in range(1, degree + 1):
        gn = R.gen(f"{kind}{n}")
        if kind == "e":
            s = gn * ((-1) ** (n - 1) * n)
            for i in range(1, n):
                s = s + R.gen(f"e{i}") * p[n - i] * (-1) ** (i - 1)
        else:
            s = gn * n
            for i in range(1, n):
                s = s - R.gen(f"h{i}") * p[n - i]
        p.append(s)
    return tuple(p)


def _expression(kind_from: str, n: int, kind_to: str, degree: int) -> GradedPolynomial:
    """Generator ``kind_from + n`` written in the ``kind_to`` basis."""
    if kind_from == kind_to:
        return basis_table(kind_to, degree).gen(f"{kind_to}{n}")
    if kind_from == "p":
        return _p_in(kind_to, degree)[n]
    in_p = (_e_in_p if kind_from == "e" else _h_in_p)(degree)[n]
    if kind_to == "p":
        return in_p
    return in_p.substitute(
        {f"p{k}": _p_in(kind_to, degree)[k] for k in range(1, degree + 1)},
        basis_table(kind_to, degree),
    )


def _split_name(name: str) -> tuple[str, int]:
    kind, n = name[0], name[1:]
    if kind not in BASES or not n.isdigit():
        raise ValueError(f"{name!r} is not a p/e/h generator")
    return kind, int(n)


def newton_convert(expr: GradedPolynomial, target: str, degree: int) -> GradedPolynomial:
    """Rewrite a polynomial in p/e/h generators entirely in the ``target`` basis.

    The result lives over ``basis_table(target, degree)``.
    """
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    ws = expr.weights()
    if ws and max(ws) > degree:
        raise ValueError(f"expression has weight {max(ws)} above the degree bound {degree}")
    assignment = {}
    for name in expr.variables():
        kind, n = _split_name(name)
        if n > degree:
            raise ValueError(f"generator {name} exceeds the degree bound {degree}")
        assignment[name] = _expression(kind, n, target, degree)
    table = basis_table(target, degree)
    for name in expr.table.names:
        if name not in assignment:
            assignment[name] = 0  # unused generators
    return expr.substitute(assignment, table)


def elementary_in_p(n: int) -> GradedPolynomial:
    return _e_in_p(n)[n]


def complete_in_p(n: int) -> GradedPolynomial:
    return _h_in_p(n)[n]


def _normalize(expr: GradedPolynomial, degree: int, table: GeneratorTable, prefix: str, power) -> GradedPolynomial:
    if not expr.is_homogeneous():
        raise ValueError("normalization needs a weight-homogeneous expression")
    p1 = table.gen("p1")
    assignment = {}
    for name in expr.table.names:
        kind, n = _split_name(name)
        if kind != "p":
            raise ValueError("normalization expects a p-basis expression")
        if n > degree:
            if name in expr.variables():
                raise ValueError(f"generator {name} exceeds the degree bound {degree}")
            assignment[name] = 0
            continue
        assignment[name] = p1 if n == 1 else table.gen(f"{prefix}{n}") * p1 ** power(n)
    return expr.substitute(assignment, table)


def normalize_wp(expr: GradedPolynomial, degree: int) -> GradedPolynomial:
    """Substitute p_n = wp_n * p_1^n (so wp_1 = 1)."""
    return _normalize(expr, degree, wp_table(degree), "wp", lambda n: n)


def normalize_wp_linear(expr: GradedPolynomial, degree: int) -> GradedPolynomial:
    """The other convention, p_n = p_1 * wl_n."""
    return _normalize(expr, degree, wl_table(degree), "wl", lambda n: 1)


def symbolic_series_at(series: TruncatedSeries, alphabet: Sequence) -> TruncatedSeries:
    """Evaluate every coefficient of a Q[p_*] series at an alphabet's power sums."""
    return series.map_coefficients(lambda c: evaluate_at(c, alphabet), QQ)
