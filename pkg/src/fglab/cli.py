"""Command-line front end: ``fglab <command> [options]``.

Exit status: 0 when everything computed and every verification passed,
1 when some verification line reports a discrepancy, 2 on usage errors
(nothing is computed in that case).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from dataclasses import dataclass, field

from .boltzmann import EnergeticSet, boltzmann_exp, boltzmann_fgl, gibbs_series
from .checks import Check, compare_series
from .cobordism import (
    cartier_character,
    cartier_series,
    hurewicz_substitute,
    specialize,
    st_mu,
    universal_fgl,
    universal_log,
)
from .coeff_ring import QQ, GradedPolynomial, rational
from .fgl import FormalGroupLaw, fgl_additive, fgl_check_axioms, fgl_gm
from .powerseries import MultiSeries, TruncatedSeries
from .prob_bridge import (
    exp_of_distribution,
    fgl_of_distribution,
    kappa,
    mgf,
    moments,
    parse_distribution,
    st_modulus,
    verify_intertwining,
)
from .symfun import complete_in_p, elementary_in_p, gen_E, gen_H, gen_P, h_from_p, normalize_wp, power_sum
from .verify import SUITES, SYMBOLIC_ORDER, cumulant_dictionary, gibbs_cumulant_check, run_suite

COMMANDS = ("gm", "universal", "boltzmann", "dist", "gibbs", "symfun", "verify")
DEFAULT_ORDER = 12

DIST_EMITS = ("moments", "mgf", "exp", "log", "law", "kappa", "st")
UNIVERSAL_EMITS = ("log", "law", "st", "cartier")
SYMFUN_EMITS = ("E", "H", "P", "p", "h_from_p", "newton")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    order: int = DEFAULT_ORDER
    format: str = "json"
    output: str | None = None
    seed: int = 0
    topological: bool = False
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.order < 1:
            raise UsageError("--order must be at least 1")
        if self.format not in ("json", "table"):
            raise UsageError("--format must be json or table")


@dataclass
class Result:
    command: str
    order: int
    items: list  # (label, value) pairs
    verification: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.verification)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fglab", description="Exact formal group law computations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None, help=f"truncation order (default {DEFAULT_ORDER})")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--output", default=None, help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--topological", action="store_true",
                        help="also report topological degrees (twice the stored weights)")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("gm", parents=[common], help="the multiplicative law x + y - xy")

    p = sub.add_parser("universal", parents=[common], help="universal law over Q[CP_*]")
    p.add_argument("--spec", choices=("CP=1", "CP=0"), default=None)
    p.add_argument("--emit", default="log,law")

    p = sub.add_parser("boltzmann", parents=[common], help="Boltzmann law of an energetic set")
    p.add_argument("--levels", default=None)
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--normalized", action="store_true")

    p = sub.add_parser("dist", parents=[common], help="formal group law of a random variable")
    p.add_argument("--kind", choices=("poisson", "bernoulli", "finite"), default=None)
    p.add_argument("--param", default=None)
    p.add_argument("--dist", default=None, help="literal such as poisson:1 or finite:1@1/2,2@1/2")
    p.add_argument("--emit", default="exp,kappa,st")

    p = sub.add_parser("gibbs", parents=[common], help="Gibbs free-energy series")
    p.add_argument("--levels", default=None)
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--normalized", action="store_true")

    p = sub.add_parser("symfun", parents=[common], help="symmetric-function generating functions")
    p.add_argument("--alphabet", default=None)
    p.add_argument("--emit", default=None)

    p = sub.add_parser("verify", parents=[common], help="seeded property suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    return parser


def _emit_list(text: str, allowed) -> list[str]:
    items = [s.strip() for s in text.split(",") if s.strip()]
    for s in items:
        if s not in allowed:
            raise UsageError(f"--emit: unknown item {s!r} (choose from {', '.join(allowed)})")
    return items


def config_from_args(argv) -> RunConfig:
    """Parse and validate everything up front; raises UsageError or SystemExit(2)."""
    ns = _parser().parse_args(argv)
    order = ns.order
    if order is None:
        order = SYMBOLIC_ORDER if ns.command == "universal" else DEFAULT_ORDER
    opts: dict = {}
    try:
        if ns.command == "universal":
            opts["spec"] = ns.spec
            opts["emit"] = _emit_list(ns.emit, UNIVERSAL_EMITS)
            if "cartier" in opts["emit"] and order < 2:
                raise UsageError("cartier needs --order >= 2")
        elif ns.command in ("boltzmann", "gibbs"):
            if ns.levels is None and not ns.symbolic:
                raise UsageError("give --levels or --symbolic")
            opts["levels"] = EnergeticSet.parse(ns.levels) if ns.levels is not None else None
            opts["symbolic"] = ns.symbolic
            opts["normalized"] = ns.normalized
        elif ns.command == "dist":
            if ns.dist is not None:
                if ns.kind is not None or ns.param is not None:
                    raise UsageError("use either --dist or --kind/--param")
                opts["dist"] = parse_distribution(ns.dist)
            else:
                if ns.kind is None or ns.param is None:
                    raise UsageError("give --kind and --param, or --dist")
                opts["dist"] = parse_distribution(f"{ns.kind}:{ns.param}")
            opts["emit"] = _emit_list(ns.emit, DIST_EMITS)
        elif ns.command == "symfun":
            opts["alphabet"] = (
                [rational(v) for v in ns.alphabet.split(",") if v.strip()] if ns.alphabet else None
            )
            default = "E,H,P,p" if opts["alphabet"] is not None else "h_from_p,newton"
            opts["emit"] = _emit_list(ns.emit or default, SYMFUN_EMITS)
            if opts["alphabet"] is None and set(opts["emit"]) & {"E", "H", "P", "p"}:
                raise UsageError("E, H, P and p need --alphabet")
        elif ns.command == "verify":
            opts["suite"] = ns.suite
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    return RunConfig(ns.command, order, ns.format, ns.output, ns.seed, ns.topological, opts)


def _axiom_checks(name: str, F) -> list[Check]:
    rep = fgl_check_axioms(F)
    return [Check(f"{name}: {c.name}", c.passed, c.first_discrepancy) for c in rep.checks]


def compute(cfg: RunConfig) -> Result:
    N, o = cfg.order, cfg.options
    items: list = []
    checks: list[Check] = []

    if cfg.command == "gm":
        F = fgl_gm(N)
        items = [("law", F.law), ("exp", F.exp), ("log", F.log)]
        checks = _axiom_checks("Gm", F)

    elif cfg.command == "universal":
        emit = o["emit"]
        value = {"CP=1": 1, "CP=0": 0}.get(o["spec"])

        def spec(obj, keep=()):
            return obj if value is None else specialize(obj, value, keep)

        if "log" in emit:
            items.append(("log", spec(universal_log(N))))
        if "law" in emit:
            U = universal_fgl(N)
            items.append(("law", spec(U.law)))
            checks += _axiom_checks("universal law", spec(U))
            if value is not None:
                ref = fgl_gm(N) if value == 1 else fgl_additive(N)
                checks.append(compare_series(f"{o['spec']} specialization", spec(U.law), ref.law))
        if "st" in emit:
            s = st_mu(N)
            items.append(("st", spec(s, keep=("b",))))
            items.append(("st_power_sums", s.map_coefficients(
                lambda c: hurewicz_substitute(c, N), hurewicz_substitute(s[1], N).table)))
        if "cartier" in emit:
            items.append(("cartier", spec(cartier_series(N), keep=("beta",))))
            checks += list(cartier_character(N).checks)

    elif cfg.command == "boltzmann":
        E = o["levels"]
        if E is not None:
            items.append(("levels", [str(v) for v in E]))
            F = boltzmann_fgl(E, N)
            items += [("exp", F.exp), ("law", F.law)]
            checks = _axiom_checks("Boltzmann law", F)
        if o["symbolic"]:
            s = boltzmann_exp(None, N)
            items.append(("exp_symbolic", s))
            if o["normalized"]:
                items.append(("exp_normalized", s.map_coefficients(
                    lambda c: normalize_wp(c, N), normalize_wp(s[1], N).table)))

    elif cfg.command == "dist":
        d = o["dist"]
        items.append(("distribution", d.literal()))
        for what in o["emit"]:
            if what == "moments":
                items.append(("moments", [m for m in moments(d, N)]))
            elif what == "mgf":
                items.append(("mgf", mgf(d, N)))
            elif what == "exp":
                items.append(("exp", exp_of_distribution(d, N)))
            elif what == "log":
                items.append(("log", fgl_of_distribution(d, N).log))
            elif what == "law":
                F = fgl_of_distribution(d, N)
                items.append(("law", F.law))
                checks += _axiom_checks("law", F)
            elif what == "kappa":
                items.append(("kappa", kappa(d, N)))
            elif what == "st":
                items.append(("st", st_modulus(d, N)))
        checks += list(verify_intertwining(d, N).checks)
        checks.append(cumulant_dictionary(d, N))

    elif cfg.command == "gibbs":
        g = gibbs_series(o["levels"], N)
        if g.numeric is not None:
            items += [("levels", [str(v) for v in g.levels]), ("omega", g.numeric)]
            checks.append(Check("numeric = symbolic evaluated at power sums", g.consistent()))
        if o["symbolic"] or g.numeric is None:
            items.append(("omega_symbolic", g.symbolic))
        if o["normalized"]:
            items.append(("omega_normalized", g.normalized))
        checks.append(gibbs_cumulant_check(N))

    elif cfg.command == "symfun":
        a = o["alphabet"]
        for what in o["emit"]:
            if what == "E":
                items.append(("E", gen_E(a, N)))
            elif what == "H":
                items.append(("H", gen_H(a, N)))
            elif what == "P":
                items.append(("P", gen_P(a, N)))
            elif what == "p":
                items.append(("power_sums", [power_sum(a, n) for n in range(1, N + 1)]))
            elif what == "h_from_p":
                items.append(("h_from_p", h_from_p(N)))
            elif what == "newton":
                items.append(("e_in_p", [elementary_in_p(n) for n in range(1, N + 1)]))
                items.append(("h_in_p", [complete_in_p(n) for n in range(1, N + 1)]))

    elif cfg.command == "verify":
        items.append(("suite", o["suite"]))
        items.append(("seed", cfg.seed))
        checks = run_suite(o["suite"], N, cfg.seed)

    if cfg.topological:
        items += [(f"{label}_topological_degrees", degs)
                  for label, value in list(items) if (degs := topological_degrees(value)) is not None]
    return Result(cfg.command, N, items, checks)


def topological_degrees(value):
    """Twice the weights present in each polynomial coefficient, or None."""
    if isinstance(value, TruncatedSeries):
        coeffs = list(value.coeffs)
    elif isinstance(value, MultiSeries):
        coeffs = [c for _, c in value.sorted_items()]
    else:
        return None
    if not coeffs or not isinstance(coeffs[0], GradedPolynomial):
        return None
    return [sorted(2 * w for w in c.weights()) for c in coeffs]


def _value_json(value):
    if isinstance(value, (TruncatedSeries, MultiSeries, FormalGroupLaw)):
        return value.to_json()
    if isinstance(value, GradedPolynomial):
        return value.to_json()
    if isinstance(value, list):
        return [_value_json(v) for v in value]
    if isinstance(value, Fraction):
        return QQ.element_to_json(value)
    return value


def _table_rows(value) -> list[tuple[str, str]]:
    if isinstance(value, TruncatedSeries):
        return [(f"{value.var}^{n}", str(c)) for n, c in enumerate(value.coeffs) if c != 0]
    if isinstance(value, MultiSeries):
        rows = []
        for k, c in value.sorted_items():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(value.vars, k) if e) or "1"
            rows.append((mono, str(c)))
        return rows
    if isinstance(value, list):
        return [(f"[{i}]", str(v)) for i, v in enumerate(value)]
    return [("", str(value))]


def emit_report(result: Result, fmt: str) -> str:
    """Serialize deterministically as JSON or an aligned plain-text table."""
    if fmt == "json":
        doc = {
            "command": result.command,
            "order": result.order,
            "result": {label: _value_json(v) for label, v in result.items},
            "verification": [c.to_json() for c in result.verification],
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"command: {result.command}", f"order: {result.order}"]
    for label, value in result.items:
        lines.append("")
        lines.append(f"{label}:")
        rows = _table_rows(value)
        width = max((len(a) for a, _ in rows), default=0)
        lines += [f"  {a.ljust(width)}  {b}" for a, b in rows]
    if result.verification:
        lines.append("")
        lines.append("verification:")
        for c in result.verification:
            status = "PASS" if c.passed else "FAIL"
            extra = "" if c.passed or c.first_discrepancy is None else f"  first discrepancy: {json.dumps(c.first_discrepancy)}"
            lines.append(f"  {status}  {c.name}{extra}")
    return "\n".join(lines) + "\n"


def run(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
    except UsageError as exc:
        print(f"fglab: usage error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = compute(cfg)
    except ValueError as exc:
        print(f"fglab: {exc}", file=sys.stderr)
        return 2
    text = emit_report(result, cfg.format)
    if cfg.output:
        try:
            with open(cfg.output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"fglab: cannot write {cfg.output}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0 if result.passed else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
