"""Pass/fail records with the first coefficient where two sides disagree."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    first_discrepancy: dict | None = None

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "first_discrepancy": self.first_discrepancy}

    def __bool__(self):
        return self.passed


def _element_json(ring, value) -> Any:
    return ring.element_to_json(value)


def compare_series(name: str, lhs, rhs) -> Check:
    """Compare two truncated series (uni- or multivariate) coefficientwise.

    Comparison runs through the smaller of the two orders; the first
    mismatch is reported in graded order.
    """
    from .powerseries import MultiSeries, TruncatedSeries

    if lhs.ring != rhs.ring:
        raise ValueError("cannot compare series over different rings")
    ring = lhs.ring
    order = min(lhs.order, rhs.order)
    if isinstance(lhs, TruncatedSeries) and isinstance(rhs, TruncatedSeries):
        for n in range(order + 1):
            if lhs[n] != rhs[n]:
                return Check(name, False, {
                    "degree": n,
                    "lhs": _element_json(ring, lhs[n]),
                    "rhs": _element_json(ring, rhs[n]),
                })
        return Check(name, True)
    if isinstance(lhs, MultiSeries) and isinstance(rhs, MultiSeries):
        if lhs.vars != rhs.vars:
            raise ValueError("cannot compare series in different variables")
        keys = {k for k in set(lhs.coeffs) | set(rhs.coeffs) if sum(k) <= order}
        for k in sorted(keys, key=lambda k: (sum(k), tuple(-e for e in k))):
            a, b = lhs.coefficient(*k), rhs.coefficient(*k)
            if a != b:
                return Check(name, False, {
                    "exponents": list(k),
                    "lhs": _element_json(ring, a),
                    "rhs": _element_json(ring, b),
                })
        return Check(name, True)
    raise TypeError("compare_series needs two series of the same kind")


@dataclass(frozen=True)
class Report:
    """A named bundle of checks; passes when every check passes."""

    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]

    def __bool__(self):
        return self.passed
