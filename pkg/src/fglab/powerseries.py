"""Truncated formal power series in one or several variables.

Every value carries its truncation order N: coefficients through degree N
(total degree for :class:`MultiSeries`) are exact, anything above is
unknown.  Binary operations work to the smaller of the two orders.
Coefficients live in a ring from :mod:`fglab.coeff_ring` (``QQ`` or a
polynomial ring given by a :class:`~fglab.coeff_ring.GeneratorTable`).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .coeff_ring import QQ, GradedPolynomial, rational


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction, GradedPolynomial)) and not isinstance(value, bool)


class TruncatedSeries:
    """Dense univariate series c_0 + c_1 t + ... + c_N t^N (+ unknown)."""

    __slots__ = ("coeffs", "order", "var", "ring")

    def __init__(self, coeffs: Iterable, order: int | None = None, var: str = "t", ring=QQ):
        coeffs = [ring.coerce(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [ring.zero] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order
        self.var = var
        self.ring = ring

    @classmethod
    def _raw(cls, coeffs, order, var, ring):
        # trusted constructor: coeffs already coerced, length order + 1
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.order = order
        obj.var = var
        obj.ring = ring
        return obj

    @classmethod
    def variable(cls, order: int, var: str = "t", ring=QQ) -> TruncatedSeries:
        return cls([ring.zero, ring.one], order, var, ring)

    @classmethod
    def constant(cls, value, order: int, var: str = "t", ring=QQ) -> TruncatedSeries:
        return cls([value], order, var, ring)

    @classmethod
    def from_function(cls, fn, order: int, var: str = "t", ring=QQ) -> TruncatedSeries:
        return cls([fn(n) for n in range(order + 1)], order, var, ring)

    def __getitem__(self, n: int):
        if n < 0:
            return self.ring.zero
        if n > self.order:
            raise IndexError(f"degree {n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: TruncatedSeries):
        if self.ring != other.ring:
            raise ValueError("series over different coefficient rings")
        if self.var != other.var:
            raise ValueError(f"series in different variables: {self.var} vs {other.var}")

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncatedSeries._raw(self.coeffs[: order + 1], order, self.var, self.ring)

    def with_var(self, var: str) -> TruncatedSeries:
        return TruncatedSeries._raw(self.coeffs, self.order, var, self.ring)

    def map_coefficients(self, fn, ring=None) -> TruncatedSeries:
        ring = self.ring if ring is None else ring
        return TruncatedSeries([fn(c) for c in self.coeffs], self.order, self.var, ring)

    def valuation(self) -> int | None:
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return n
        return None

    # arithmetic

    def __add__(self, other):
        if _is_scalar(other):
            other = TruncatedSeries.constant(other, self.order, self.var, self.ring)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        n = min(self.order, other.order)
        return TruncatedSeries._raw(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n, self.var, self.ring
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw([-c for c in self.coeffs], self.order, self.var, self.ring)

    def __sub__(self, other):
        if _is_scalar(other):
            other = TruncatedSeries.constant(other, self.order, self.var, self.ring)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            c = self.ring.coerce(other)
            return TruncatedSeries._raw([a * c for a in self.coeffs], self.order, self.var, self.ring)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        c = self.ring.inverse(other)
        return self * c

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        result = TruncatedSeries.constant(self.ring.one, self.order, self.var, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.var == other.var
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.order, self.var))

    def reciprocal(self) -> TruncatedSeries:
        """1/f, for f with invertible constant term."""
        inv0 = self.ring.inverse(self.coeffs[0])
        out = [inv0]
        for n in range(1, self.order + 1):
            s = self.ring.zero
            for k in range(1, n + 1):
                s = s + self.coeffs[k] * out[n - k]
            out.append(-(s * inv0))
        return TruncatedSeries._raw(out, self.order, self.var, self.ring)

    def derivative(self) -> TruncatedSeries:
        """f'; the result is exact only through order N - 1."""
        if self.order == 0:
            return TruncatedSeries._raw([self.ring.zero], 0, self.var, self.ring)
        return TruncatedSeries._raw(
            [self.coeffs[n] * n for n in range(1, self.order + 1)], self.order - 1, self.var, self.ring
        )

    def integral(self) -> TruncatedSeries:
        """Antiderivative with zero constant term; order grows by one."""
        return TruncatedSeries._raw(
            [self.ring.zero] + [self.coeffs[n] * Fraction(1, n + 1) for n in range(self.order + 1)],
            self.order + 1, self.var, self.ring,
        )

    def compose(self, g: TruncatedSeries) -> TruncatedSeries:
        return series_compose(self, g)

    def revert(self) -> TruncatedSeries:
        return series_revert(self)

    def exp(self) -> TruncatedSeries:
        return series_exp(self)

    def log(self) -> TruncatedSeries:
        return series_log(self)

    def to_json(self) -> dict:
        return {
            "var": self.var,
            "order": self.order,
            "coeffs": [self.ring.element_to_json(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict, ring=QQ) -> TruncatedSeries:
        coeffs = [ring.element_from_json(c) for c in data["coeffs"]]
        return cls(coeffs, data["order"], data.get("var", "t"), ring)

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if n == 0 else (self.var if n == 1 else f"{self.var}^{n}")
            cs = str(c)
            if isinstance(c, GradedPolynomial) and len(c.terms) > 1:
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"{body} + O({self.var}^{self.order + 1})"

    def __repr__(self):
        return f"TruncatedSeries({self})"


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the smaller order."""
    f._check(g)
    n = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    zero = f.ring.zero
    out = []
    for d in range(n + 1):
        s = zero
        for i in range(d + 1):
            ai = a[i]
            if ai != 0:
                bj = b[d - i]
                if bj != 0:
                    s = s + ai * bj
        out.append(s)
    return TruncatedSeries._raw(out, n, f.var, f.ring)


def series_compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """f(g(t)); requires g(0) = 0.  The result keeps g's variable."""
    if f.ring != g.ring:
        raise ValueError("series over different coefficient rings")
    if g.coeffs[0] != 0:
        raise ValueError("inner series of a composition must have zero constant term")
    n = min(f.order, g.order)
    g = g.truncate(n)
    result = TruncatedSeries.constant(f.coeffs[n], n, g.var, g.ring)
    for k in range(n - 1, -1, -1):
        result = series_mul(result, g) + f.coeffs[k]
    return result


def series_revert(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse g with f(g(t)) = g(f(t)) = t through order N.

    Solves the triangular system degree by degree: with g_1..g_{d-1} known,
    the degree-d coefficient of f(g) is f_1 g_d plus terms already fixed.
    Powers of g are filled in column by column so each g^k coefficient is
    computed once.
    """
    ring = f.ring
    if f.coeffs[0] != 0:
        raise ValueError("series to revert must have zero constant term")
    if f.order < 1:
        raise ValueError("series to revert needs order at least 1")
    if not ring.is_unit(f.coeffs[1]):
        raise ValueError(f"linear coefficient {f.coeffs[1]} is not invertible")
    N = f.order
    inv1 = ring.inverse(f.coeffs[1])
    g = [ring.zero] * (N + 1)
    # pw[k][d] = [t^d] g^k
    pw = [[ring.zero] * (N + 1) for _ in range(N + 1)]
    g[1] = inv1
    pw[1][1] = inv1
    for d in range(2, N + 1):
        for k in range(2, d + 1):
            s = ring.zero
            prev = pw[k - 1]
            for i in range(1, d - k + 2):
                if g[i] != 0 and prev[d - i] != 0:
                    s = s + g[i] * prev[d - i]
            pw[k][d] = s
        acc = ring.zero
        for k in range(2, d + 1):
            if f.coeffs[k] != 0 and pw[k][d] != 0:
                acc = acc + f.coeffs[k] * pw[k][d]
        g[d] = -(acc * inv1)
        pw[1][d] = g[d]
    return TruncatedSeries._raw(g, N, f.var, ring)


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """exp(f) for f(0) = 0, via n g_n = sum_k k f_k g_{n-k}."""
    if f.coeffs[0] != 0:
        raise ValueError("exp needs a series with zero constant term")
    ring = f.ring
    g = [ring.one]
    for n in range(1, f.order + 1):
        s = ring.zero
        for k in range(1, n + 1):
            if f.coeffs[k] != 0:
                s = s + f.coeffs[k] * g[n - k] * k
        g.append(s * Fraction(1, n))
    return TruncatedSeries._raw(g, f.order, f.var, ring)


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """log(f) for f(0) = 1, via n h_n = n f_n - sum_{k<n} k h_k f_{n-k}."""
    if f.coeffs[0] != 1:
        raise ValueError("log needs a series with constant term 1")
    ring = f.ring
    h = [ring.zero]
    for n in range(1, f.order + 1):
        s = f.coeffs[n] * n
        for k in range(1, n):
            if h[k] != 0 and f.coeffs[n - k] != 0:
                s = s - h[k] * f.coeffs[n - k] * k
        h.append(s * Fraction(1, n))
    return TruncatedSeries._raw(h, f.order, f.var, ring)


def divided_power(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """gamma^k(f) = f^k / k!."""
    if k < 0:
        raise ValueError("divided powers need k >= 0")
    return (f ** k) * Fraction(1, factorial(k))


def series_scale_argument(f: TruncatedSeries, a) -> TruncatedSeries:
    """f(a t)."""
    a = f.ring.coerce(a)
    out, power = [], f.ring.one
    for c in f.coeffs:
        out.append(c * power)
        power = power * a
    return TruncatedSeries._raw(out, f.order, f.var, f.ring)


def exp_series(order: int, var: str = "t", ring=QQ) -> TruncatedSeries:
    """e^t."""
    return TruncatedSeries.from_function(lambda n: Fraction(1, factorial(n)), order, var, ring)


def geometric_series(order: int, var: str = "t", ring=QQ) -> TruncatedSeries:
    return TruncatedSeries.from_function(lambda n: 1, order, var, ring)


class MultiSeries:
    """Sparse series in several variables, exact through total degree N.

    Two-variable instances carry formal group laws; the associativity check
    needs three.
    """

    __slots__ = ("vars", "order", "coeffs", "ring")

    def __init__(self, vars: Sequence[str], order: int, coeffs: dict | None = None, ring=QQ):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("repeated variable names")
        self.order = order
        self.ring = ring
        clean = {}
        for k, c in (coeffs or {}).items():
            k = tuple(k)
            if len(k) != len(self.vars):
                raise ValueError("exponent length does not match the variables")
            if sum(k) > order:
                continue
            c = ring.coerce(c)
            if c != 0:
                clean[k] = c
        self.coeffs = clean

    @classmethod
    def _raw(cls, vars, order, coeffs, ring):
        obj = cls.__new__(cls)
        obj.vars = vars
        obj.order = order
        obj.coeffs = coeffs
        obj.ring = ring
        return obj

    @classmethod
    def from_univariate(cls, f: TruncatedSeries, vars: Sequence[str], position: int | str | None = None):
        """Embed f as a series in one of ``vars`` (default: the one named f.var)."""
        vars = tuple(vars)
        if position is None:
            position = vars.index(f.var)
        elif isinstance(position, str):
            position = vars.index(position)
        coeffs = {}
        for n, c in enumerate(f.coeffs):
            if c != 0:
                k = [0] * len(vars)
                k[position] = n
                coeffs[tuple(k)] = c
        return cls._raw(vars, f.order, coeffs, f.ring)

    @classmethod
    def constant(cls, value, vars, order, ring=QQ):
        return cls(vars, order, {(0,) * len(vars): value}, ring)

    @classmethod
    def gen(cls, var, vars, order, ring=QQ):
        k = [0] * len(vars)
        k[tuple(vars).index(var)] = 1
        return cls(vars, order, {tuple(k): ring.one}, ring)

    def coefficient(self, *exps: int):
        if len(exps) != len(self.vars):
            raise ValueError("wrong number of exponents")
        if sum(exps) > self.order:
            raise IndexError(f"total degree {sum(exps)} is beyond the truncation order {self.order}")
        return self.coeffs.get(tuple(exps), self.ring.zero)

    def __getitem__(self, exps):
        return self.coefficient(*exps)

    def constant_term(self):
        return self.coeffs.get((0,) * len(self.vars), self.ring.zero)

    def truncate(self, order: int) -> MultiSeries:
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return MultiSeries._raw(
            self.vars, order, {k: c for k, c in self.coeffs.items() if sum(k) <= order}, self.ring
        )

    def homogeneous_part(self, degree: int) -> dict:
        return {k: c for k, c in self.coeffs.items() if sum(k) == degree}

    def reorder(self, vars: Sequence[str]) -> MultiSeries:
        """Re-express in a variable list containing all of ours."""
        vars = tuple(vars)
        idx = [vars.index(v) for v in self.vars]
        coeffs = {}
        for k, c in self.coeffs.items():
            nk = [0] * len(vars)
            for i, e in zip(idx, k):
                nk[i] = e
            coeffs[tuple(nk)] = c
        return MultiSeries._raw(vars, self.order, coeffs, self.ring)

    def _check(self, other: MultiSeries):
        if self.ring != other.ring:
            raise ValueError("series over different coefficient rings")
        if self.vars != other.vars:
            raise ValueError(f"series in different variables: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if _is_scalar(other):
            other = MultiSeries.constant(other, self.vars, self.order, self.ring)
        if not isinstance(other, MultiSeries):
            return NotImplemented
        self._check(other)
        n = min(self.order, other.order)
        out = {k: c for k, c in self.coeffs.items() if sum(k) <= n}
        for k, c in other.coeffs.items():
            if sum(k) <= n:
                s = out.get(k, self.ring.zero) + c
                if s != 0:
                    out[k] = s
                else:
                    out.pop(k, None)
        return MultiSeries._raw(self.vars, n, out, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return MultiSeries._raw(self.vars, self.order, {k: -c for k, c in self.coeffs.items()}, self.ring)

    def __sub__(self, other):
        if _is_scalar(other):
            other = MultiSeries.constant(other, self.vars, self.order, self.ring)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            c = self.ring.coerce(other)
            if c == 0:
                return MultiSeries._raw(self.vars, self.order, {}, self.ring)
            return MultiSeries._raw(self.vars, self.order, {k: v * c for k, v in self.coeffs.items()}, self.ring)
        if not isinstance(other, MultiSeries):
            return NotImplemented
        self._check(other)
        n = min(self.order, other.order)
        out: dict = {}
        b_items = [(k, c, sum(k)) for k, c in other.coeffs.items()]
        for ka, ca in self.coeffs.items():
            da = sum(ka)
            if da > n:
                continue
            for kb, cb, db in b_items:
                if da + db > n:
                    continue
                k = tuple(x + y for x, y in zip(ka, kb))
                v = ca * cb
                if k in out:
                    out[k] = out[k] + v
                else:
                    out[k] = v
        out = {k: v for k, v in out.items() if v != 0}
        return MultiSeries._raw(self.vars, n, out, self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a multivariate series")
        result = MultiSeries.constant(self.ring.one, self.vars, self.order, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (
            self.vars == other.vars
            and self.order == other.order
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.vars, self.order, frozenset(self.coeffs.items())))

    def swap(self, i: int = 0, j: int = 1) -> MultiSeries:
        """Exchange the roles of two variables (keeps the names in place)."""
        coeffs = {}
        for k, c in self.coeffs.items():
            k = list(k)
            k[i], k[j] = k[j], k[i]
            coeffs[tuple(k)] = c
        return MultiSeries._raw(self.vars, self.order, coeffs, self.ring)

    def substitute(self, *args) -> MultiSeries:
        """Plug series with zero constant term in for each variable."""
        if len(args) != len(self.vars):
            raise ValueError("need one argument per variable")
        margs = _as_multi(args, self.ring)
        n = min([self.order] + [a.order for a in margs])
        one = MultiSeries.constant(self.ring.one, margs[0].vars, n, self.ring)
        maxexp = [0] * len(margs)
        for k in self.coeffs:
            for i, e in enumerate(k):
                maxexp[i] = max(maxexp[i], e)
        powers = []
        for a, m in zip(margs, maxexp):
            a = a.truncate(n)
            ps = [one]
            for _ in range(min(m, n)):
                ps.append(ps[-1] * a)
            powers.append(ps)
        out = MultiSeries._raw(margs[0].vars, n, {}, self.ring)
        for k, c in self.coeffs.items():
            if sum(k) > n:
                continue
            term = one
            for i, e in enumerate(k):
                if e:
                    term = term * powers[i][e]
            out = out + term * c
        return out

    def map_coefficients(self, fn, ring=None) -> MultiSeries:
        ring = self.ring if ring is None else ring
        return MultiSeries(self.vars, self.order, {k: fn(c) for k, c in self.coeffs.items()}, ring)

    def sorted_items(self) -> list:
        return sorted(self.coeffs.items(), key=lambda kc: (sum(kc[0]), tuple(-e for e in kc[0])))

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "order": self.order,
            "coeffs": [list(k) + [self.ring.element_to_json(c)] for k, c in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, data: dict, ring=QQ) -> MultiSeries:
        coeffs = {tuple(entry[:-1]): ring.element_from_json(entry[-1]) for entry in data["coeffs"]}
        return cls(data["vars"], data["order"], coeffs, ring)

    def __str__(self):
        parts = []
        for k, c in self.sorted_items():
            factors = []
            for v, e in zip(self.vars, k):
                if e == 1:
                    factors.append(v)
                elif e:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            cs = str(c)
            if isinstance(c, GradedPolynomial) and len(c.terms) > 1:
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"{body} + O({self.order + 1})"

    def __repr__(self):
        return f"MultiSeries({self})"


BivariateSeries = MultiSeries


def _as_multi(args, ring) -> list[MultiSeries]:
    """Bring univariate/multivariate arguments onto one merged variable list."""
    names: list[str] = []
    for a in args:
        if a.ring != ring:
            raise ValueError("series over different coefficient rings")
        for v in (a.vars if isinstance(a, MultiSeries) else (a.var,)):
            if v not in names:
                names.append(v)
    out = []
    for a in args:
        if isinstance(a, TruncatedSeries):
            m = MultiSeries.from_univariate(a, names)
        elif isinstance(a, MultiSeries):
            m = a.reorder(names)
        else:
            raise TypeError(f"cannot substitute {type(a).__name__}")
        if m.constant_term() != 0:
            raise ValueError("substituted series must have zero constant term")
        out.append(m)
    return out


def bivariate_substitute(F: MultiSeries, gx, gy) -> MultiSeries:
    """F(gx, gy) exact through the smallest order involved."""
    if len(F.vars) != 2:
        raise ValueError("bivariate_substitute needs a two-variable series")
    return F.substitute(gx, gy)


def compose_into(f: TruncatedSeries, g: MultiSeries) -> MultiSeries:
    """f(g) for univariate f and multivariate g with g(0) = 0."""
    if f.ring != g.ring:
        raise ValueError("series over different coefficient rings")
    if g.constant_term() != 0:
        raise ValueError("inner series of a composition must have zero constant term")
    n = min(f.order, g.order)
    g = g.truncate(n)
    result = MultiSeries.constant(f.coeffs[n], g.vars, n, g.ring)
    for k in range(n - 1, -1, -1):
        result = result * g + f.coeffs[k]
    return result


def lagrange_inversion(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse via [t^n] g = (1/n) [t^{n-1}] (t / f)^n.

    Independent of :func:`series_revert`; kept for cross-checking.
    """
    if f.coeffs[0] != 0 or not f.ring.is_unit(f.coeffs[1]):
        raise ValueError("need f(0) = 0 and an invertible linear coefficient")
    N = f.order
    ring = f.ring
    # t/f = 1/(f/t), exact through order N - 1
    shifted = TruncatedSeries._raw(f.coeffs[1:], N - 1, f.var, ring)
    q = shifted.reciprocal()
    g = [ring.zero]
    for n in range(1, N + 1):
        g.append((q ** n)[n - 1] * Fraction(1, n))
    return TruncatedSeries._raw(g, N, f.var, ring)


def series_from_rationals(values, var: str = "t") -> TruncatedSeries:
    return TruncatedSeries([rational(v) for v in values], None, var, QQ)
