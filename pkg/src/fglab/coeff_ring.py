"""Exact scalars and graded sparse polynomials over Q.

Scalars are :class:`fractions.Fraction`.  Polynomials live over a
:class:`GeneratorTable` that names the generators and fixes their weights;
a table doubles as the coefficient ring handed to the series code, and
:data:`QQ` plays the same role for plain rationals.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

ExactRational = Fraction

Scalar = Union[int, Fraction]


def rational(value) -> Fraction:
    """Coerce ``value`` (int, Fraction or a ``"num/den"`` string) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Scalar) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


_STANDARD_NAME = re.compile(r"^(CP|p|e|h|wp|wl)(\d+)$")


def standard_weight(name: str) -> int:
    """Weight of a generator under the package naming scheme.

    ``CPn``, ``pn``, ``en``, ``hn`` have weight n; ``wpn`` (p_n / p_1^n) has
    weight 0; ``wln`` (p_n / p_1) has weight n - 1; ``b`` and ``beta`` have
    weight 1.  Weights are half the topological degree.
    """
    if name in ("b", "beta"):
        return 1
    m = _STANDARD_NAME.match(name)
    if m is None:
        raise ValueError(f"no standard weight for generator {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "wp":
        return 0
    if kind == "wl":
        return n - 1
    return n


class RationalField:
    """The field Q viewed as a coefficient ring for series."""

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, GradedPolynomial):
            raise TypeError("polynomial coefficient in a series over Q")
        return rational(value)

    def inverse(self, value) -> Fraction:
        value = self.coerce(value)
        if value == 0:
            raise ZeroDivisionError("zero is not invertible in Q")
        return 1 / value

    def is_unit(self, value) -> bool:
        return self.coerce(value) != 0

    def element_to_json(self, value):
        return format_rational(value)

    def element_from_json(self, data) -> Fraction:
        return rational(data)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class GeneratorTable:
    """Ordered, weighted generator names; also the ring Q[generators]."""

    __slots__ = ("names", "weights", "_index")

    def __init__(self, entries: Iterable[tuple[str, int]]):
        names, weights = [], []
        for name, weight in entries:
            if weight < 0:
                raise ValueError(f"negative weight for {name!r}")
            names.append(name)
            weights.append(int(weight))
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        self.names = tuple(names)
        self.weights = tuple(weights)
        self._index = {n: i for i, n in enumerate(self.names)}

    @classmethod
    def standard(cls, names: Iterable[str]) -> GeneratorTable:
        return cls((n, standard_weight(n)) for n in names)

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return (
            isinstance(other, GeneratorTable)
            and self.names == other.names
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.names, self.weights))

    def __repr__(self):
        inner = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"GeneratorTable({inner})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"generator {name!r} not in table") from None

    def weight(self, name: str) -> int:
        return self.weights[self.index(name)]

    def extend(self, entries: Iterable[tuple[str, int]]) -> GeneratorTable:
        return GeneratorTable(list(zip(self.names, self.weights)) + list(entries))

    # ring interface used by the series code

    @property
    def zero(self) -> GradedPolynomial:
        return GradedPolynomial({}, self)

    @property
    def one(self) -> GradedPolynomial:
        return self.const(1)

    def const(self, value: Scalar) -> GradedPolynomial:
        value = rational(value)
        if value == 0:
            return GradedPolynomial({}, self)
        return GradedPolynomial({(0,) * len(self): value}, self)

    def gen(self, name: str) -> GradedPolynomial:
        exps = [0] * len(self)
        exps[self.index(name)] = 1
        return GradedPolynomial({tuple(exps): Fraction(1)}, self)

    def monomial(self, powers: Mapping[str, int], coeff: Scalar = 1) -> GradedPolynomial:
        exps = [0] * len(self)
        for name, e in powers.items():
            if e < 0:
                raise ValueError("negative exponent")
            exps[self.index(name)] += e
        coeff = rational(coeff)
        if coeff == 0:
            return self.zero
        return GradedPolynomial({tuple(exps): coeff}, self)

    def coerce(self, value) -> GradedPolynomial:
        if isinstance(value, GradedPolynomial):
            if value.table != self:
                raise ValueError("mismatched generator tables")
            return value
        return self.const(value)

    def is_unit(self, value) -> bool:
        value = self.coerce(value)
        return value.is_constant() and value.constant_term() != 0

    def inverse(self, value) -> GradedPolynomial:
        value = self.coerce(value)
        if not self.is_unit(value):
            raise ValueError(f"{value} is not invertible in Q[{', '.join(self.names)}]")
        return self.const(1 / value.constant_term())

    def element_to_json(self, value):
        return self.coerce(value).to_json()

    def element_from_json(self, data) -> GradedPolynomial:
        if isinstance(data, str):
            return self.const(rational(data))
        return GradedPolynomial.from_json(data, self)


class GradedPolynomial:
    """Sparse polynomial with exact rational coefficients.

    Monomials are exponent tuples aligned with the table order.  Instances are
    treated as immutable; every operation returns a new polynomial.
    """

    __slots__ = ("terms", "table", "_hash")

    def __init__(self, terms: Mapping[tuple, Fraction], table: GeneratorTable):
        self.table = table
        self.terms = {m: Fraction(c) for m, c in terms.items() if c != 0}
        self._hash = None

    # construction helpers

    @classmethod
    def from_dict(cls, terms: Mapping[tuple, Scalar], table: GeneratorTable):
        return cls({m: rational(c) for m, c in terms.items()}, table)

    def _lift(self, other) -> GradedPolynomial:
        if isinstance(other, GradedPolynomial):
            if other.table != self.table:
                raise ValueError("mismatched generator tables")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.table.const(other)
        return NotImplemented

    # arithmetic

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return GradedPolynomial(out, self.table)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial({m: -c for m, c in self.terms.items()}, self.table)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return self.table.zero
            return GradedPolynomial({m: c * other for m, c in self.terms.items()}, self.table)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[tuple, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return GradedPolynomial(out, self.table)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GradedPolynomial):
            if not other.is_constant():
                raise ValueError("division by a non-constant polynomial")
            other = other.constant_term()
        other = rational(other)
        return self * (1 / other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = self.table.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, GradedPolynomial):
            return self.table == other.table and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash((self.table, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.table), Fraction(0))

    def monomial_weight(self, mono: tuple) -> int:
        return sum(e * w for e, w in zip(mono, self.table.weights))

    def weights(self) -> set[int]:
        return {self.monomial_weight(m) for m in self.terms}

    def is_homogeneous(self, weight: int | None = None) -> bool:
        ws = self.weights()
        if not ws:
            return True
        if len(ws) > 1:
            return False
        return weight is None or ws == {weight}

    def variables(self) -> set[str]:
        used = set()
        for m in self.terms:
            used.update(n for n, e in zip(self.table.names, m) if e)
        return used

    def coefficient(self, powers: Mapping[str, int]) -> Fraction:
        exps = [0] * len(self.table)
        for name, e in powers.items():
            exps[self.table.index(name)] = e
        return self.terms.get(tuple(exps), Fraction(0))

    def _sort_key(self, mono):
        return (self.monomial_weight(mono), tuple(-e for e in mono))

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in graded lexicographic order (weight, then table order)."""
        return sorted(self.terms.items(), key=lambda mc: self._sort_key(mc[0]))

    def monomial_dict(self, mono: tuple) -> dict[str, int]:
        return {n: e for n, e in zip(self.table.names, mono) if e}

    # conversions

    def substitute(self, assignment: Mapping[str, object], target: GeneratorTable | None = None):
        return poly_substitute(self, assignment, target)

    def to_json(self) -> list[dict]:
        return [
            {"monomial": self.monomial_dict(m), "value": format_rational(c)}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list[dict], table: GeneratorTable | None = None) -> GradedPolynomial:
        if table is None:
            names = []
            for entry in data:
                for name in entry["monomial"]:
                    if name not in names:
                        names.append(name)
            table = GeneratorTable.standard(names)
        out = table.zero
        for entry in data:
            out = out + table.monomial(entry["monomial"], rational(entry["value"]))
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.table.names, m):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"GradedPolynomial({self})"


def _check_same_table(a: GradedPolynomial, b: GradedPolynomial):
    if a.table != b.table:
        raise ValueError("mismatched generator tables")


def poly_add(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    _check_same_table(a, b)
    return a + b


def poly_mul(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    _check_same_table(a, b)
    return a * b


def poly_substitute(
    p: GradedPolynomial,
    assignment: Mapping[str, object],
    target: GeneratorTable | None = None,
) -> GradedPolynomial:
    """Simultaneously replace generators of ``p``.

    Values may be rationals or polynomials over ``target`` (defaults to
    ``p.table``).  Generators left out of ``assignment`` are kept and must
    exist in ``target``.
    """
    target = p.table if target is None else target
    images = []
    for name in p.table.names:
        if name in assignment:
            value = assignment[name]
            if isinstance(value, GradedPolynomial) and value.table != target:
                missing = value.variables() - set(target.names)
                raise ValueError(
                    f"value for {name!r} uses generators outside the target table: "
                    f"{sorted(missing) or 'table mismatch'}"
                )
            images.append(target.coerce(value))
        else:
            images.append(None)
    for name in assignment:
        if name not in p.table:
            raise KeyError(f"generator {name!r} not in table")

    powers: dict[tuple[int, int], GradedPolynomial] = {}

    def image_power(i, e):
        key = (i, e)
        if key not in powers:
            base = images[i]
            if base is None:
                name = p.table.names[i]
                if name not in target:
                    raise ValueError(f"generator {name!r} absent from the target table")
                base = target.gen(name)
            powers[key] = base ** e
        return powers[key]

    out = target.zero
    for mono, c in p.terms.items():
        term = target.const(c)
        for i, e in enumerate(mono):
            if e:
                term = term * image_power(i, e)
        out = out + term
    return out


@lru_cache(maxsize=None)
def named_table(*names: str) -> GeneratorTable:
    """Cached table built from standard generator names."""
    return GeneratorTable.standard(names)
