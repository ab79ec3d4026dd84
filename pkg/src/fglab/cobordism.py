"""The universal logarithm and group law over Q[CP_1, CP_2, ...].

Also the modulus st_MU(t) = 1 - exp(-b log_MU(t)), the substitution
b CP_{n-1} -> p_n onto power sums, and the Cartier character
b(t) = sum_k gamma^k(beta log_MU(t)) in the rational divided-power model.
CP_n carries weight n; b and beta carry weight 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .checks import Report, compare_series
from .coeff_ring import QQ, GeneratorTable, GradedPolynomial
from .fgl import LAW_VARS, FormalGroupLaw, fgl_from_log, gm_exp
from .powerseries import (
    MultiSeries,
    TruncatedSeries,
    compose_into,
    divided_power,
    series_compose,
    series_log,
)
from .symfun import basis_table


@lru_cache(maxsize=None)
def universal_table(N: int, b: bool = False, beta: bool = False) -> GeneratorTable:
    """Q[CP_1 .. CP_{N-1}], optionally with b and/or beta."""
    entries = [(f"CP{n}", n) for n in range(1, N)]
    if b:
        entries.append(("b", 1))
    if beta:
        entries.append(("beta", 1))
    return GeneratorTable(entries)


def _cp(ring: GeneratorTable, n: int) -> GradedPolynomial:
    return ring.one if n == 0 else ring.gen(f"CP{n}")


def universal_log(N: int, ring: GeneratorTable | None = None, var: str = "t") -> TruncatedSeries:
    """log_MU(c) = sum_{n=1}^N CP_{n-1} c^n / n."""
    if N < 1:
        raise ValueError("need N >= 1")
    ring = universal_table(N) if ring is None else ring
    return TruncatedSeries(
        [ring.zero] + [_cp(ring, n - 1) * Fraction(1, n) for n in range(1, N + 1)], N, var, ring
    )


@lru_cache(maxsize=None)
def universal_fgl(N: int) -> FormalGroupLaw:
    return fgl_from_log(universal_log(N))


def st_mu(N: int) -> TruncatedSeries:
    """1 - e^{-b log_MU(t)} over Q[CP_*, b]."""
    ring = universal_table(N, b=True)
    u = universal_log(N, ring) * ring.gen("b")
    return series_compose(gm_exp(N, ring=ring), u)


def specialize(obj, value, keep=()):
    """Set every CP_n to ``value`` (commonly 1 or 0).

    Generators named in ``keep`` (b, beta) survive in a reduced table;
    otherwise the result is over Q.  Works on polynomials, series and laws.
    """
    if isinstance(obj, FormalGroupLaw):
        return FormalGroupLaw(
            specialize(obj.law, value, keep),
            specialize(obj.exp, value, keep),
            specialize(obj.log, value, keep),
            obj.order,
        )
    ring = obj.ring if isinstance(obj, (TruncatedSeries, MultiSeries)) else obj.table
    target = GeneratorTable((n, ring.weight(n)) for n in keep) if keep else None

    def fn(c: GradedPolynomial):
        assignment = {n: value for n in c.table.names if n.startswith("CP")}
        if target is None:
            r = c.substitute(assignment)
            if not r.is_constant():
                raise ValueError("specialization left free generators")
            return r.constant_term()
        return c.substitute(assignment, target)

    if isinstance(obj, GradedPolynomial):
        return fn(obj)
    return obj.map_coefficients(fn, QQ if target is None else target)


def hurewicz_monomial_image(powers: dict[str, int]) -> dict[str, int]:
    """b^k CP_a1 ... CP_am  ->  p_{a1+1} ... p_{am+1} p_1^{k-m}."""
    k = powers.get("b", 0)
    out: dict[str, int] = {}
    m = 0
    for name, e in powers.items():
        if name == "b":
            continue
        if not name.startswith("CP"):
            raise ValueError(f"generator {name!r} has no power-sum image")
        m += e
        key = f"p{int(name[2:]) + 1}"
        out[key] = out.get(key, 0) + e
    if m > k:
        raise ValueError(
            f"monomial {powers} has {m} CP factors but only {k} b's to pair them with"
        )
    if k > m:
        out["p1"] = out.get("p1", 0) + (k - m)
    return out


def hurewicz_substitute(p: GradedPolynomial, degree: int | None = None) -> GradedPolynomial:
    """Identify b CP_{n-1} with p_n; the result is over Q[p_1 .. p_degree]."""
    images = [(hurewicz_monomial_image(p.monomial_dict(m)), c) for m, c in p.terms.items()]
    if degree is None:
        degree = max([1] + [int(n[1:]) for img, _ in images for n in img])
    table = basis_table("p", degree)
    out = table.zero
    for img, c in images:
        out = out + table.monomial(img, c)
    return out


def cartier_series(N: int) -> TruncatedSeries:
    """b(t) = sum_k gamma^k(beta log_MU(t)) over Q[CP_*, beta]."""
    ring = universal_table(N, beta=True)
    u = universal_log(N, ring) * ring.gen("beta")
    out = TruncatedSeries.constant(ring.one, N, "t", ring)
    for k in range(1, N + 1):
        out = out + divided_power(u, k)
    return out


def cartier_character(N: int, log_order: int | None = None) -> Report:
    """Check b(F_MU(t0, t1)) = b(t0) b(t1) through total degree N.

    Also checks the linearized statement log b(t) = beta log_MU(t), through
    ``log_order`` (defaults to N).
    """
    if N < 2:
        raise ValueError("need N >= 2")
    ring = universal_table(N, beta=True)
    b = cartier_series(N)
    law = universal_fgl(N).law.map_coefficients(lambda c: c.substitute({}, ring), ring)
    lhs = compose_into(b, law)
    b0 = MultiSeries.from_univariate(b, LAW_VARS, 0)
    b1 = MultiSeries.from_univariate(b, LAW_VARS, 1)
    checks = [compare_series("b(F_MU(t0,t1)) = b(t0) b(t1)", lhs, b0 * b1)]

    M = N if log_order is None else log_order
    ring_m = universal_table(M, beta=True)
    bm = cartier_series(M)
    checks.append(compare_series(
        "log b(t) = beta log_MU(t)", series_log(bm), universal_log(M, ring_m) * ring_m.gen("beta")
    ))
    return Report(tuple(checks))
