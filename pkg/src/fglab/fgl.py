"""One-dimensional formal group laws over Q and Q-polynomial rings."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .checks import Check, Report, compare_series
from .coeff_ring import QQ
from .powerseries import (
    MultiSeries,
    TruncatedSeries,
    compose_into,
    series_compose,
    series_revert,
    series_scale_argument,
)

LAW_VARS = ("x", "y")


@dataclass(frozen=True, eq=False)
class FormalGroupLaw:
    """F(x, y) = exp(log x + log y), with both coordinate series kept.

    ``exp`` may have any invertible linear coefficient; use
    :meth:`normalized` for the classical exp'(0) = 1 form.
    """

    law: MultiSeries
    exp: TruncatedSeries
    log: TruncatedSeries
    order: int

    @property
    def ring(self):
        return self.law.ring

    def coefficient(self, i: int, j: int):
        return self.law.coefficient(i, j)

    def __call__(self, gx, gy) -> MultiSeries:
        return self.law.substitute(gx, gy)

    def normalized(self) -> FormalGroupLaw:
        """Strictly isomorphic law with exp'(0) = 1 (coordinate x -> x / a)."""
        a = self.exp[1]
        return fgl_from_exp(self.exp * self.ring.inverse(a))

    def same_law(self, other: FormalGroupLaw) -> bool:
        return self.law == other.law

    def to_json(self) -> dict:
        return {
            "exp": self.exp.to_json(),
            "log": self.log.to_json(),
            "law": self.law.to_json(),
            "order": self.order,
        }

    @classmethod
    def from_json(cls, data: dict, ring=QQ) -> FormalGroupLaw:
        return cls(
            MultiSeries.from_json(data["law"], ring),
            TruncatedSeries.from_json(data["exp"], ring),
            TruncatedSeries.from_json(data["log"], ring),
            data["order"],
        )

    def __str__(self):
        return str(self.law)


def _law_from(exp_series: TruncatedSeries, log_series: TruncatedSeries) -> MultiSeries:
    lx = MultiSeries.from_univariate(log_series, LAW_VARS, 0)
    ly = MultiSeries.from_univariate(log_series, LAW_VARS, 1)
    return compose_into(exp_series, lx + ly)


def _check_coordinate(series: TruncatedSeries, what: str):
    if series.coeffs[0] != 0:
        raise ValueError(f"{what} must have zero constant term")
    if series.order < 1 or not series.ring.is_unit(series[1]):
        raise ValueError(f"{what} needs an invertible linear coefficient, got {series.coeffs[1:2]}")


def fgl_from_log(log_series: TruncatedSeries) -> FormalGroupLaw:
    _check_coordinate(log_series, "logarithm")
    exp_series = series_revert(log_series)
    return FormalGroupLaw(_law_from(exp_series, log_series), exp_series, log_series, log_series.order)


def fgl_from_exp(exp_series: TruncatedSeries) -> FormalGroupLaw:
    _check_coordinate(exp_series, "exponential")
    log_series = series_revert(exp_series)
    return FormalGroupLaw(_law_from(exp_series, log_series), exp_series, log_series, exp_series.order)


def gm_exp(order: int, var: str = "t", ring=QQ) -> TruncatedSeries:
    """1 - e^{-t}."""
    from math import factorial

    return TruncatedSeries.from_function(
        lambda n: 0 if n == 0 else Fraction((-1) ** (n + 1), factorial(n)), order, var, ring
    )


def gm_log(order: int, var: str = "t", ring=QQ) -> TruncatedSeries:
    """-log(1 - t)."""
    return TruncatedSeries.from_function(lambda n: 0 if n == 0 else Fraction(1, n), order, var, ring)


def fgl_gm(order: int, ring=QQ) -> FormalGroupLaw:
    """The multiplicative law x + y - xy with exp = 1 - e^{-x}, log = -log(1 - x)."""
    exp_series = gm_exp(order, ring=ring)
    log_series = gm_log(order, ring=ring)
    law = MultiSeries(LAW_VARS, order, {(1, 0): 1, (0, 1): 1, (1, 1): -1}, ring)
    return FormalGroupLaw(law, exp_series, log_series, order)


def fgl_additive(order: int, ring=QQ) -> FormalGroupLaw:
    t = TruncatedSeries.variable(order, ring=ring)
    return FormalGroupLaw(MultiSeries(LAW_VARS, order, {(1, 0): 1, (0, 1): 1}, ring), t, t, order)


def scaled_gm(scale, order: int) -> FormalGroupLaw:
    """Law with exponential 1 - e^{-scale t}; the multiplicative law for every scale != 0."""
    return fgl_from_exp(series_scale_argument(gm_exp(order), scale))


@dataclass(frozen=True)
class AxiomReport:
    unit: bool
    commutative: bool
    associative: bool
    first_failure: Check | None
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return self.unit and self.commutative and self.associative

    def __bool__(self):
        return self.passed

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]


def fgl_check_axioms(F: FormalGroupLaw | MultiSeries, order: int | None = None) -> AxiomReport:
    """Unit, commutativity and associativity of a law, through total degree N."""
    law = F.law if isinstance(F, FormalGroupLaw) else F
    ring = law.ring
    N = law.order if order is None else min(order, law.order)
    law = law.truncate(N)

    x = TruncatedSeries.variable(N, "x", ring)
    expected_unit = MultiSeries.from_univariate(x, LAW_VARS, 0)
    unit_lhs = MultiSeries(LAW_VARS, N, {k: c for k, c in law.coeffs.items() if k[1] == 0}, ring)
    unit = compare_series("unit F(x,0)=x", unit_lhs, expected_unit)

    comm = compare_series("commutativity F(x,y)=F(y,x)", law, law.swap())

    xyz = ("x", "y", "z")
    X = MultiSeries.gen("x", xyz, N, ring)
    Y = MultiSeries.gen("y", xyz, N, ring)
    Z = MultiSeries.gen("z", xyz, N, ring)
    fxy = law.substitute(X, Y)
    fyz = law.substitute(Y, Z)
    assoc = compare_series(
        "associativity F(F(x,y),z)=F(x,F(y,z))", law.substitute(fxy, Z), law.substitute(X, fyz)
    )
    checks = (unit, comm, assoc)
    first = next((c for c in checks if not c.passed), None)
    return AxiomReport(unit.passed, comm.passed, assoc.passed, first, checks)


def fgl_hom_check(phi: TruncatedSeries, F: FormalGroupLaw, G: FormalGroupLaw) -> Check:
    """Does phi(F(x, y)) = G(phi(x), phi(y)) hold through total degree N?"""
    if phi.coeffs[0] != 0:
        raise ValueError("a homomorphism must have zero constant term")
    N = min(phi.order, F.order, G.order)
    phi = phi.truncate(N)
    lhs = compose_into(phi, F.law.truncate(N))
    rhs = G.law.truncate(N).substitute(phi.with_var("x"), phi.with_var("y"))
    return compare_series("homomorphism phi(F(x,y))=G(phi(x),phi(y))", lhs, rhs)


def coordinate_change(F: FormalGroupLaw, G: FormalGroupLaw) -> TruncatedSeries:
    """exp_G o log_F, the canonical homomorphism F -> G over Q."""
    return series_compose(G.exp, F.log)


def law_report(F: FormalGroupLaw) -> Report:
    return Report(fgl_check_axioms(F).checks)
