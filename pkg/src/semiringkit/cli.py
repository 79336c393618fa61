"""Command-line entry point: ``semiringkit <command> ...``.

Every command prints a report (``--json`` for JSON).  Exit status is 0 when
each verdict matches the expectations table, 1 on a mismatch and 2 on usage,
parse or input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import euclid, factor, finite, frac, poly
from .core import Boolean, MCSet, Naturals, Semiring, TropicalNat, Verdict, check_laws, jsonable
from .errors import ParseError, SemiringError, UnsupportedFamily
from .ideals import registered_spectrum

FAMILIES = ("nat", "trop", "bool", "finite")
SUITES = ("euclid", "pisd", "ufsd", "saturated", "gaussian", "closed", "gk", "nilpotent", "all")


def load_expectations(path=None) -> dict:
    """Verdict name -> expected outcome; anything unlisted is expected to hold."""
    if path is None:
        text = resources.files("semiringkit").joinpath("expectations.json").read_text()
    else:
        text = Path(path).read_text(encoding="utf-8")
    return json.loads(text)


def resolve_family(text: str) -> Semiring:
    """``nat``, ``trop``, ``bool``, a named table (``chain3``, ``z2``) or a table file."""
    key = text.strip().lower()
    named = {
        "nat": Naturals, "naturals": Naturals,
        "trop": TropicalNat, "tropical": TropicalNat,
        "bool": Boolean, "boolean": Boolean,
        "chain3": finite.chain3, "z2": finite.z2,
    }
    if key in named:
        return named[key]()
    path = Path(text)
    if path.is_file():
        return finite.read_table_file(path)
    raise ParseError(f"unknown family {text!r} (nat, trop, bool, chain3, z2 or a table file)")


def parse_value(text: str, s: Semiring):
    if isinstance(s, frac.FractionsOver):
        return frac.parse_fraction(text, s.base).value
    return poly.parse_element(text, s)


# ---------------------------------------------------------------- reports


@dataclass
class Report:
    command: str
    inputs: dict
    verdicts: list = field(default_factory=list)
    output: dict = field(default_factory=dict)
    expectations: dict = field(default_factory=dict)
    elapsed: dict = field(default_factory=dict)

    def entries(self) -> list[dict]:
        rows = []
        for v in self.verdicts:
            row = v.to_dict()
            row["expected"] = self.expectations.get(v.name, True)
            if v.name in self.elapsed:
                row["elapsed"] = round(self.elapsed[v.name], 4)
            rows.append(row)
        return rows

    @property
    def exit_code(self) -> int:
        return 0 if all(r["holds"] == r["expected"] for r in self.entries()) else 1

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": jsonable(self.inputs),
            "output": jsonable(self.output),
            "verdicts": self.entries(),
            "exit_code": self.exit_code,
        }

    def render(self, as_json: bool) -> str:
        data = self.to_dict()
        if as_json:
            return json.dumps(data, indent=2) + "\n"
        yes = {True: "yes", False: "no"}
        lines = [f"command: {data['command']}"]
        lines.append("inputs: " + " ".join(f"{k}={_flat(v)}" for k, v in data["inputs"].items()))
        for key, value in data["output"].items():
            if isinstance(value, str) and "\n" in value:
                lines.append(f"{key}:")
                lines.extend("  " + ln for ln in value.rstrip("\n").split("\n"))
            else:
                lines.append(f"{key}: {_flat(value)}")
        for row in data["verdicts"]:
            flag = "ok" if row["holds"] == row["expected"] else "MISMATCH"
            lines.append(f"verdict {row['name']}: holds={yes[row['holds']]} "
                         f"expected={yes[row['expected']]} [{flag}]")
            for key in ("witness", "bounds", "note", "elapsed"):
                if row.get(key) not in (None, "", {}):
                    lines.append(f"  {key}: {_flat(row[key])}")
        lines.append(f"exit_code: {data['exit_code']}")
        return "\n".join(lines) + "\n"


def _flat(value) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, separators=(",", ":"))


def _all_of(name: str, verdicts: list) -> Verdict:
    """Fold many verdicts into one; the first failure becomes the witness."""
    bad = next((v for v in verdicts if not v.holds), None)
    if bad is None:
        return Verdict(name, True, note=f"{len(verdicts)} checks")
    return Verdict(name, False, witness={"check": bad.name, "witness": bad.witness},
                   note=bad.note)


# ---------------------------------------------------------------- suites


def _finite_universe(order: int):
    for n in range(2, order + 1):
        yield from finite.enumerate_semirings(n)


def suite_euclid(opts):
    out = []
    if "nat" in opts.families:
        E = euclid.naturals_structure()
        bound = opts.bound or 200
        out.append(euclid.verify_structure(E, bound))
        out.append(euclid.verify_structure(euclid.star_structure(E), bound))
        out.append(_gcd_oracle(E, bound))
    if "trop" in opts.families:
        E = euclid.tropical_structure()
        out.append(euclid.verify_structure(E, opts.bound or 100))
        out.append(euclid.verify_structure(euclid.star_structure(E), opts.bound or 100))
    if "bool" in opts.families:
        out.append(euclid.verify_structure(euclid.boolean_structure()))
    if "finite" in opts.families:
        checks = []
        for S in _finite_universe(opts.order):
            checks.append(euclid.check_subtractive_principal(S))
            E = euclid.find_euclidean_norm(S)
            if E is not None:
                checks.append(euclid.verify_structure(E))
                checks.append(euclid.verify_structure(euclid.star_structure(E)))
        out.append(_all_of(f"euclid/finite-order<={opts.order}", checks))
    return out


def _gcd_oracle(E, bound: int) -> Verdict:
    name = f"gcd-oracle/{E.semiring.describe()}"
    for a in range(bound + 1):
        for b in range(bound + 1):
            if (a or b) and euclid.euclidean_gcd(E, a, b) != math.gcd(a, b):
                return Verdict(name, False, witness=(a, b), bounds={"bound": bound})
    return Verdict(name, True, bounds={"bound": bound})


def suite_pisd(opts):
    out = []
    if "trop" in opts.families:
        out.append(factor.check_pisd_properties(TropicalNat(), opts.bound or 200))
    if "bool" in opts.families:
        out.append(factor.check_pisd_properties(Boolean()))
    if "nat" in opts.families:
        out.append(_pisd_membership(Naturals()))
    if "finite" in opts.families:
        checks = [factor.check_pisd_properties(S)
                  for S in _finite_universe(opts.order) if frac.registered_pisd(S)]
        out.append(_all_of(f"pisd-properties/finite-order<={opts.order}", checks))
    return out


def _pisd_membership(s: Semiring) -> Verdict:
    try:
        frac.check_pisd_gk(s)
    except SemiringError as exc:
        return Verdict(f"pisd/{s.describe()}", False, note=str(exc))
    return Verdict(f"pisd/{s.describe()}", True)


def suite_ufsd(opts):
    out = []
    if "nat" in opts.families:
        out.append(factor.check_kaplansky(Naturals(), opts.bound or 200))
        out.append(factor.check_factorizations(Naturals(), opts.bound or 1000))
    if "trop" in opts.families:
        out.append(factor.check_kaplansky(TropicalNat(), opts.bound or 50))
        out.append(factor.check_factorizations(TropicalNat(), opts.bound or 200))
    if "bool" in opts.families:
        out.append(factor.check_kaplansky(Boolean()))
    return out


def suite_saturated(opts):
    out = []
    if "nat" in opts.families:
        out.append(factor.check_saturated_prime_products(Naturals(), opts.bound or 100))
    if "trop" in opts.families:
        out.append(factor.check_saturated_prime_products(TropicalNat(), opts.bound or 50))
    if "finite" in opts.families:
        checks = [finite.check_saturated_complement(S, W)
                  for S in _finite_universe(opts.order) for W in finite.mc_sets(S)]
        out.append(_all_of(f"saturated-complement/finite-order<={opts.order}", checks))
    return out


def suite_gaussian(opts):
    out = []
    kw = dict(degree_bound=opts.degree_bound, coeff_bound=opts.coeff_bound)
    for fam, base in (("bool", Boolean()), ("trop", TropicalNat()), ("nat", Naturals())):
        if fam in opts.families:
            out.append(poly.check_gaussian(base, trials=opts.trials, seed=opts.seed, **kw))
    if "finite" in opts.families:
        checks = [poly.check_gaussian(S, **kw)
                  for S in _finite_universe(opts.order) if poly.is_subtractive_pis(S)]
        out.append(_all_of(f"gaussian/finite-subtractive-pis-order<={opts.order}", checks))
    return out


def suite_closed(opts):
    out = []
    if "nat" in opts.families:
        out.append(frac.principal_subtractive_sweep(Naturals(), opts.bound or 100))
        out.append(frac.check_integrally_closed(Naturals(), ["powers:2", "powers:3"],
                                                opts.degree_bound, 20))
    if "trop" in opts.families:
        out.append(frac.check_integrally_closed(TropicalNat(), [], 2, 6))
    if "bool" in opts.families:
        out.append(frac.check_integrally_closed(Boolean()))
    return out


def suite_gk(opts):
    out = []
    bound = opts.bound or 30
    if "trop" in opts.families:
        T = TropicalNat()
        out += [frac.is_goldman_krull(T), frac.check_gk_equivalences(T, 1, bound),
                frac.check_pisd_gk(T)]
        out += [frac.is_goldman_krull(frac.localize(T, MCSet.powers(k))) for k in (1, 2, 3)]
    if "nat" in opts.families:
        N = Naturals()
        out += [frac.is_goldman_krull(N), frac.check_gk_equivalences(N, 2, bound)]
    if "bool" in opts.families:
        B = Boolean()
        out += [frac.is_goldman_krull(B), frac.check_gk_equivalences(B, 1, bound),
                frac.check_pisd_gk(B)]
    return out


def suite_nilpotent(opts):
    out = []
    for fam, base in (("nat", Naturals()), ("trop", TropicalNat()), ("bool", Boolean())):
        if fam in opts.families:
            out.append(frac.is_nilpotent_free(base))
    if "finite" in opts.families:
        checks = [frac.check_local_global_nilpotent(S) for S in _finite_universe(opts.order)]
        out.append(_all_of(f"nilpotent-local-global/finite-order<={opts.order}", checks))
    return out


SUITE_FUNCS = {
    "euclid": suite_euclid, "pisd": suite_pisd, "ufsd": suite_ufsd,
    "saturated": suite_saturated, "gaussian": suite_gaussian, "closed": suite_closed,
    "gk": suite_gk, "nilpotent": suite_nilpotent,
}


# ---------------------------------------------------------------- commands


def cmd_validate(args) -> Report:
    order, add, mul = finite.read_table_file(args.path, validate=False)
    violations = finite.table_violations(order, add, mul)
    v = Verdict("axioms", not violations,
                witness=[{"axiom": x.axiom, "witness": x.witness} for x in violations] or None,
                bounds={"exhaustive": True})
    return Report("validate", {"path": args.path}, [v], {"order": order})


def cmd_ideals(args) -> Report:
    S = resolve_family(args.family)
    if not S.finite:
        raise UnsupportedFamily("ideal lattices are listed for finite carriers only")
    ideals = finite.enumerate_ideals(S)
    rows = [{"members": sorted(I), **finite.classify_ideal(S, I, ideals).to_dict()}
            for I in ideals]
    return Report("ideals", {"family": args.family}, [], {"ideals": rows})


def cmd_spec(args) -> Report:
    S = resolve_family(args.family)
    reg = registered_spectrum(S, args.bound or 200)
    shown = [str(P) if not S.finite else sorted(P.members) for P in reg.primes]
    return Report("spec", {"family": args.family, "bound": args.bound},
                  [], {"primes": shown, "complete": reg.complete, "note": reg.note})


def cmd_gcd(args) -> Report:
    S = resolve_family(args.family)
    E = euclid.euclidean_structure(S)
    a, b = parse_value(args.a, S), parse_value(args.b, S)
    chain = euclid.remainder_chain(E, a, b)
    return Report("gcd", {"family": args.family, "a": a, "b": b}, [],
                  {"gcd": chain.gcd, "chain": list(chain.remainders),
                   "quotients": list(chain.quotients)})


def cmd_factor(args) -> Report:
    S = resolve_family(args.family)
    x = parse_value(args.x, S)
    fac = factor.factor_accp(S, x)
    return Report("factor", {"family": args.family, "x": x}, [],
                  {"unit": fac.unit, "factors": list(fac.factors)})


def cmd_content(args) -> Report:
    S = resolve_family(args.family)
    f = poly.parse_polynomial(args.f, S)
    out = {"f": str(f), "content": poly.content(f)}
    verdicts = []
    if args.g is not None:
        g = poly.parse_polynomial(args.g, S)
        fg = poly.poly_mul(f, g)
        out.update({"g": str(g), "fg": str(fg), "content(fg)": poly.content(fg)})
        verdicts.append(poly.check_content_formula(S, f, g))
    return Report("content", {"family": args.family, "f": args.f, "g": args.g}, verdicts, out)


def cmd_gaussian(args) -> Report:
    S = resolve_family(args.family)
    v = poly.check_gaussian(S, args.degree_bound, args.coeff_bound, args.trials, args.seed)
    return Report("gaussian", {"family": args.family, "degree_bound": args.degree_bound,
                               "coeff_bound": args.coeff_bound, "trials": args.trials,
                               "seed": args.seed}, [v])


def cmd_localize(args) -> Report:
    S = resolve_family(args.family)
    T = MCSet.parse(args.mcset)
    R = frac.localize(S, T)
    out = {"localization": R.describe()}
    if isinstance(R, finite.FiniteSemiring):
        out["table"] = finite.dump_table(R)
    else:
        out["semifield"] = R.is_semifield()
        out["members"] = {}
        for text in args.values:
            value = frac.parse_fraction(text, S).value
            member = R.contains(value)
            out["members"][text] = member
    return Report("localize", {"family": args.family, "mcset": str(T), "values": args.values},
                  [], out)


def cmd_integral(args) -> Report:
    S = resolve_family(args.family)
    u = frac.parse_fraction(args.u, S)
    eq = frac.search_integral_witness(S, u, args.degree_bound, args.coeff_bound)
    out = {"u": str(u), "value": u.value, "equation": eq}
    return Report("integral", {"family": args.family, "u": args.u,
                               "degree_bound": args.degree_bound,
                               "coeff_bound": args.coeff_bound}, [], out)


def cmd_gk(args) -> Report:
    S = resolve_family(args.family)
    verdicts = [frac.is_goldman_krull(S)]
    if args.u is not None:
        verdicts.append(frac.check_gk_equivalences(S, parse_value(args.u, S), args.bound or 30))
    return Report("gk", {"family": args.family, "u": args.u, "bound": args.bound}, verdicts)


def cmd_nilpotent(args) -> Report:
    S = resolve_family(args.family)
    verdicts = [frac.is_nilpotent_free(S)]
    if S.finite:
        verdicts.append(frac.check_local_global_nilpotent(S))
    return Report("nilpotent", {"family": args.family}, verdicts)


def cmd_enumerate(args) -> Report:
    order = args.order_pos if args.order_pos is not None else args.order
    rows, chunks = [], []
    for S in finite.enumerate_semirings(order):
        summ = finite.ideal_summary(S)
        yes = {True: "yes", False: "no"}
        line = (f"ideals={summ['ideals']} primes={summ['primes']} "
                f"subtractive={yes[summ['subtractive']]} principal={yes[summ['principal']]}")
        rows.append({"name": S.describe(), "summary": line})
        chunks.append(f"# {S.describe()} {line}\n{finite.dump_table(S)}")
    text = "\n".join(chunks)
    out = {"count": len(rows), "semirings": rows}
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        out["written"] = args.output
    else:
        out["tables"] = text
    return Report("enumerate", {"order": order, "output": args.output}, [], out)


def cmd_check(args) -> Report:
    suites = list(SUITE_FUNCS) if args.suite == "all" else [args.suite]
    opts = argparse.Namespace(**vars(args))
    opts.families = (args.family,) if args.family else FAMILIES
    verdicts, elapsed = [], {}
    for name in suites:
        for v in _timed(SUITE_FUNCS[name], opts, elapsed):
            verdicts.append(v)
    inputs = {"suite": args.suite, "family": args.family, "order": args.order,
              "bound": args.bound, "degree_bound": args.degree_bound,
              "coeff_bound": args.coeff_bound, "trials": args.trials, "seed": args.seed}
    return Report("check", inputs, verdicts, elapsed=elapsed if args.timing else {})


def _timed(fn, opts, elapsed):
    start = time.perf_counter()
    verdicts = fn(opts)
    per = (time.perf_counter() - start) / max(len(verdicts), 1)
    for v in verdicts:
        elapsed[v.name] = per
    return verdicts


def cmd_laws(args) -> Report:
    S = resolve_family(args.family)
    return Report("laws", {"family": args.family, "seed": args.seed},
                  [check_laws(S, args.trials * 10, args.seed)])


COMMANDS = {
    "validate": cmd_validate, "ideals": cmd_ideals, "spec": cmd_spec, "gcd": cmd_gcd,
    "factor": cmd_factor, "content": cmd_content, "gaussian": cmd_gaussian,
    "localize": cmd_localize, "integral": cmd_integral, "gk": cmd_gk,
    "nilpotent": cmd_nilpotent, "enumerate": cmd_enumerate, "check": cmd_check,
    "laws": cmd_laws,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=3, help="largest enumerated order")
    common.add_argument("--bound", type=int, default=None, help="scope for bounded sweeps")
    common.add_argument("--degree-bound", type=int, default=3)
    common.add_argument("--coeff-bound", type=int, default=None,
                        help="coefficient scope (gaussian: 6, integral: 20)")
    common.add_argument("--trials", type=int, default=1000)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=1,
                        help="accepted for compatibility; checks run sequentially")
    common.add_argument("--json", action="store_true", help="JSON report")
    common.add_argument("--timing", action="store_true", help="add elapsed seconds per verdict")
    common.add_argument("--expectations", default=None, help="expectations JSON file")

    parser = argparse.ArgumentParser(prog="semiringkit", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    add("validate", "check a table file against the semiring axioms").add_argument("path")
    add("ideals", "list and classify the ideals of a finite semiring").add_argument("family")
    add("spec", "registered prime ideals").add_argument("family")
    p = add("gcd", "Euclidean gcd with its remainder chain")
    p.add_argument("family")
    p.add_argument("a")
    p.add_argument("b")
    p = add("factor", "factor into irreducibles")
    p.add_argument("family")
    p.add_argument("x")
    p = add("content", "content ideal, and the content formula for two polynomials")
    p.add_argument("family")
    p.add_argument("f")
    p.add_argument("g", nargs="?")
    add("gaussian", "test c(fg) = c(f)c(g)").add_argument("family")
    p = add("localize", "localize at an MC-set (units | nonzero | powers:e | set:{i,j})")
    p.add_argument("family")
    p.add_argument("mcset")
    p.add_argument("values", nargs="*", help="fractions a/b to test for membership")
    p = add("integral", "search an integral equation for a fraction a/b")
    p.add_argument("family")
    p.add_argument("u")
    p = add("gk", "Goldman-Krull detection")
    p.add_argument("family")
    p.add_argument("--u", default=None, help="candidate element for the three conditions")
    add("nilpotent", "nilpotent-freeness").add_argument("family")
    p = add("enumerate", "enumerate finite semirings of one order")
    p.add_argument("order_pos", nargs="?", type=int, metavar="ORDER")
    p.add_argument("--output", "-o", default=None)
    p = add("check", "run a theorem-check suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--family", choices=FAMILIES, default=None)
    add("laws", "random or exhaustive axiom checks").add_argument("family")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.coeff_bound is None:
        args.coeff_bound = 20 if args.command == "integral" else 6
    try:
        expectations = load_expectations(args.expectations)
        report = COMMANDS[args.command](args)
    except (SemiringError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    report.expectations = expectations
    sys.stdout.write(report.render(args.json))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
