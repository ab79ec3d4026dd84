"""Seeded property suites; each returns a flat list of named checks."""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial

from .boltzmann import (
    EnergeticSet,
    boltzmann_fgl,
    ensemble_average_fgl,
    gibbs_series,
    level_law,
)
from .checks import Check, compare_series
from .cobordism import cartier_character, specialize, universal_fgl, universal_log
from .fgl import fgl_additive, fgl_check_axioms, fgl_from_exp, fgl_from_log, fgl_gm
from .powerseries import (
    TruncatedSeries,
    lagrange_inversion,
    series_compose,
    series_exp,
    series_log,
    series_revert,
    series_scale_argument,
)
from .prob_bridge import (
    Bernoulli,
    FiniteSupport,
    Poisson,
    classical_cumulants,
    exp_of_distribution,
    fgl_of_distribution,
    kappa,
    mgf,
    moments,
    st_modulus,
    verify_intertwining,
)
from .symfun import (
    basis_table,
    gen_E,
    gen_H,
    gen_P,
    h_from_p,
    newton_convert,
    power_sum,
    symbolic_series_at,
)

SUITES = ("engine", "fgl", "symfun", "prob", "boltzmann", "universal")

SYMBOLIC_ORDER = 5


def random_rational(rng: random.Random, size: int = 5, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-size, size), rng.randint(1, size))
        if q or not nonzero:
            return q


def random_coordinate(rng: random.Random, order: int, unit: bool = True) -> TruncatedSeries:
    """Random f with f(0) = 0 and invertible linear term (1 when ``unit``)."""
    lin = Fraction(1) if unit else random_rational(rng, nonzero=True)
    return TruncatedSeries([0, lin] + [random_rational(rng) for _ in range(order - 1)], order)


def random_distribution(rng: random.Random) -> FiniteSupport:
    """Finite-support law with 1..4 atoms and nonzero mean."""
    while True:
        k = rng.randint(1, 4)
        values = [random_rational(rng) for _ in range(k)]
        raw = [rng.randint(1, 6) for _ in range(k)]
        total = sum(raw)
        atoms = tuple((v, Fraction(w, total)) for v, w in zip(values, raw))
        dist = FiniteSupport(atoms)
        if moments(dist, 1)[1] != 0:
            return dist


def random_energetic_set(rng: random.Random, max_size: int = 4) -> EnergeticSet:
    levels = set()
    size = rng.randint(1, max_size)
    while len(levels) < size:
        levels.add(Fraction(rng.randint(1, 12), rng.randint(1, 4)))
    return EnergeticSet(sorted(levels))


def engine_suite(order: int, rng: random.Random, count: int = 100) -> list[Check]:
    t = TruncatedSeries.variable(order)
    rev_ok = exp_ok = assoc_ok = lagrange_ok = None
    for i in range(count):
        f = random_coordinate(rng, order)
        g = series_revert(f)
        for name, lhs in (("f(rev f)", series_compose(f, g)), ("rev f(f)", series_compose(g, f))):
            c = compare_series(f"reversion roundtrip {name}", lhs, t)
            if not c and rev_ok is None:
                rev_ok = c
        h = TruncatedSeries([0] + [random_rational(rng) for _ in range(order)], order)
        c = compare_series("log(exp h) = h", series_log(series_exp(h)), h)
        if not c and exp_ok is None:
            exp_ok = c
        one_plus = TruncatedSeries([1] + [random_rational(rng) for _ in range(order)], order)
        c = compare_series("exp(log u) = u", series_exp(series_log(one_plus)), one_plus)
        if not c and exp_ok is None:
            exp_ok = c
        if i < 20:
            k = random_coordinate(rng, order, unit=False)
            c = compare_series(
                "composition associativity",
                series_compose(series_compose(f, h), k),
                series_compose(f, series_compose(h, k)),
            )
            if not c and assoc_ok is None:
                assoc_ok = c
            c = compare_series("triangular reversion = Lagrange inversion", g, lagrange_inversion(f))
            if not c and lagrange_ok is None:
                lagrange_ok = c
    # [t^n] rev(t - t^2) is the Catalan number C_{n-1} = binom(2n-2, n-1) / n
    catalan = [0] + [comb(2 * n - 2, n - 1) // n for n in range(1, order + 1)]
    n = order
    f = TruncatedSeries([0, 1, -1], n)
    return [
        rev_ok or Check(f"reversion roundtrips on {count} random series", True),
        exp_ok or Check(f"exp/log roundtrips on {count} random series", True),
        assoc_ok or Check("composition associativity on 20 random triples", True),
        lagrange_ok or Check("triangular reversion = Lagrange inversion on 20 random series", True),
        compare_series("rev(t - t^2) = Catalan numbers", series_revert(f), TruncatedSeries(catalan, n)),
    ]


def fgl_suite(order: int, rng: random.Random, count: int = 5) -> list[Check]:
    N = min(order, 10)
    out = []
    for name, F in (("Gm", fgl_gm(N)), ("additive", fgl_additive(N))):
        out.append(Check(f"axioms: {name}", fgl_check_axioms(F).passed))
    bad = []
    for _ in range(count):
        L = random_coordinate(rng, N, unit=False)
        F = fgl_from_log(L)
        rep = fgl_check_axioms(F)
        if not rep.passed:
            bad.append(rep.first_failure.to_json())
        if fgl_from_exp(F.exp).law != F.law:
            bad.append({"name": "from_exp(exp_F) reproduces the law"})
    out.append(Check(f"axioms of {count} random laws from logarithms", not bad, bad[0] if bad else None))
    return out


def symfun_suite(order: int, rng: random.Random, count: int = 10) -> list[Check]:
    out = []
    bad = None
    one = TruncatedSeries.constant(1, order)
    H_sym = h_from_p(order)
    for _ in range(count):
        alphabet = [random_rational(rng) for _ in range(rng.randint(1, 5))]
        E = gen_E(alphabet, order)
        E_neg = series_scale_argument(E, -1)
        H = gen_H(alphabet, order)
        P = gen_P(alphabet, order)
        checks = [
            compare_series("H(t) E(-t) = 1", H * E_neg, one),
            compare_series("H' = P H", H.derivative(), (P * H).truncate(order - 1)),
            compare_series(
                "[t^r] P = p_{r+1}", P,
                TruncatedSeries([power_sum(alphabet, r + 1) for r in range(order + 1)], order),
            ),
            compare_series("h_from_p at alphabet = H", symbolic_series_at(H_sym, alphabet), H),
        ]
        bad = bad or next((c for c in checks if not c), None)
    out.append(bad or Check(f"generating-function identities on {count} random alphabets", True))
    out.extend(newton_roundtrips(order))
    return out


def newton_roundtrips(degree: int) -> list[Check]:
    P = basis_table("p", degree)
    failures = {"p->e->p": None, "p->h->p": None, "e->h->e": None}
    for n in range(1, degree + 1):
        pn = P.gen(f"p{n}")
        if newton_convert(newton_convert(pn, "e", degree), "p", degree) != pn:
            failures["p->e->p"] = failures["p->e->p"] or {"degree": n}
        if newton_convert(newton_convert(pn, "h", degree), "p", degree) != pn:
            failures["p->h->p"] = failures["p->h->p"] or {"degree": n}
        en = basis_table("e", degree).gen(f"e{n}")
        if newton_convert(newton_convert(en, "h", degree), "e", degree) != en:
            failures["e->h->e"] = failures["e->h->e"] or {"degree": n}
    return [
        Check(f"Newton roundtrip {k} through degree {degree}", v is None, v)
        for k, v in failures.items()
    ]


def cumulant_dictionary(dist, N: int) -> Check:
    """n! [t^n] kappa_F = (-1)^{n+1} kappa_n against the moment recursion."""
    k = kappa(dist, N)
    classical = classical_cumulants(moments(dist, N))
    expected = TruncatedSeries(
        [0] + [(-1) ** (n + 1) * classical[n] * Fraction(1, factorial(n)) for n in range(1, N + 1)], N
    )
    return compare_series("cumulant sign dictionary", k, expected)


def prob_suite(order: int, rng: random.Random, count: int = 20) -> list[Check]:
    N = order
    dists = [Poisson(1), Bernoulli(Fraction(1, 2))] + [random_distribution(rng) for _ in range(count)]
    out = []
    inter = cum = two_path = None
    for d in dists:
        rep = verify_intertwining(d, N)
        if not rep and inter is None:
            inter = Check(f"intertwining for {d.literal()}", False, rep.first_failure.to_json())
        c = cumulant_dictionary(d, N)
        if not c and cum is None:
            cum = Check(f"cumulant dictionary for {d.literal()}", False, c.first_discrepancy)
        alt = 1 - series_scale_argument(mgf(d, N), -1)
        c = compare_series("exp_F = 1 - M(-t)", exp_of_distribution(d, N), alt)
        if not c and two_path is None:
            two_path = c
    label = f"Poisson(1), Bernoulli(1/2) and {count} random finite laws"
    out.append(inter or Check(f"intertwining identities: {label}", True))
    out.append(cum or Check(f"cumulant dictionary: {label}", True))
    out.append(two_path or Check(f"exp_F = 1 - M(-t): {label}", True))
    out.append(compare_series(
        "Poisson(1): st_F = -log(1-x)", st_modulus(Poisson(1), N),
        TruncatedSeries([0] + [Fraction(1, n) for n in range(1, N + 1)], N),
    ))
    out.append(compare_series("Bernoulli(1): law = Gm", fgl_of_distribution(Bernoulli(1), N).law, fgl_gm(N).law))
    return out


def boltzmann_suite(order: int, rng: random.Random, count: int = 5) -> list[Check]:
    N = min(order, 8)
    out = []
    rep = fgl_check_axioms(boltzmann_fgl(EnergeticSet([1, 2, 3]), N))
    out.append(Check(f"axioms: Boltzmann law of {{1,2,3}} at order {N}", rep.passed,
                     rep.first_failure.to_json() if rep.first_failure else None))
    gm = fgl_gm(order).law
    single = None
    for _ in range(10):
        lam = Fraction(rng.randint(1, 20), rng.randint(1, 6))
        c = compare_series(f"single level {lam} gives x + y - xy", boltzmann_fgl(EnergeticSet([lam]), order).law, gm)
        single = single or (None if c else c)
    out.append(single or Check("single-level Boltzmann laws are x + y - xy (10 random levels)", True))
    ens = gib = None
    for _ in range(count):
        E = random_energetic_set(rng)
        avg = ensemble_average_fgl([level_law(lam, N) for lam in E])
        c = compare_series(f"ensemble of scaled Gm = Boltzmann law for {list(map(str, E))}",
                           avg.law, boltzmann_fgl(E, N).law)
        ens = ens or (None if c else c)
        g = gibbs_series(E, order)
        if not g.consistent():
            gib = gib or Check(f"Gibbs numeric/symbolic agree for {list(map(str, E))}", False)
    out.append(ens or Check(f"ensemble averages match Boltzmann laws ({count} random sets)", True))
    out.append(gib or Check(f"Gibbs numeric/symbolic consistency ({count} random sets)", True))
    out.append(gibbs_cumulant_check(N))
    return out


def gibbs_cumulant_check(N: int) -> Check:
    """n! [x^n] Omega equals the cumulant polynomial with m_n := p_n."""
    sym = gibbs_series(None, N).symbolic
    R = sym.ring
    m = [R.one] + [R.gen(f"p{n}") for n in range(1, N + 1)]
    k = classical_cumulants(m, N)
    expected = TruncatedSeries([R.zero] + [k[n] * Fraction(1, factorial(n)) for n in range(1, N + 1)], N, "x", R)
    return compare_series(f"Gibbs coefficients = cumulant polynomials in power sums (order {N})", sym, expected)


def universal_suite(order: int, rng: random.Random | None = None) -> list[Check]:
    N = min(order, SYMBOLIC_ORDER)
    U = universal_fgl(N)
    rep = fgl_check_axioms(U)
    out = [Check(f"axioms: universal law through degree {N}", rep.passed,
                 rep.first_failure.to_json() if rep.first_failure else None)]
    out.append(compare_series("CP -> 1 gives Gm", specialize(U, 1).law, fgl_gm(N).law))
    out.append(compare_series("CP -> 0 gives additive", specialize(U, 0).law, fgl_additive(N).law))
    from .fgl import gm_log

    out.append(compare_series("log_MU at CP -> 1 is -log(1-t)", specialize(universal_log(order), 1), gm_log(order)))
    out.extend(cartier_character(min(order, 6), order).checks)
    return out


def run_suite(name: str, order: int, seed: int) -> list[Check]:
    rng = random.Random(seed)
    if name == "all":
        checks = []
        for s in SUITES:
            checks.extend(run_suite(s, order, rng.randrange(2 ** 32)))
        return checks
    if name == "engine":
        return engine_suite(order, rng)
    if name == "fgl":
        return fgl_suite(order, rng)
    if name == "symfun":
        return symfun_suite(order, rng)
    if name == "prob":
        return prob_suite(order, rng)
    if name == "boltzmann":
        return boltzmann_suite(order, rng)
    if name == "universal":
        return universal_suite(order, rng)
    raise ValueError(f"unknown suite {name!r}")
