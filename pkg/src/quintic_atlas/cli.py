"""Command-line front end.

Exit codes: 0 success, 1 user error (bad input), 2 internal inconsistency.
Results go to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .classifier import ComplexMultiplicity, classify_complex, classify_real, witness_roots
from .errors import DomainError, InternalInconsistency, PreconditionError
from .invariants import CORE_FIELDS, OPTIONAL_FIELDS, QuinticCoeffs, compute_invariants, verify_identities
from .oracle import cross_check
from .parsing import ParseError, format_polynomial, parse_polynomial
from .polycore import Poly
from .sturm import IsolatingInterval, count_real_roots, isolate_real_roots, refine, sturm_chain

SCHEMA = "quintic-atlas/1"

COMPLEX_NAMES = {
    ComplexMultiplicity.FIVE_DISTINCT: "5 distinct roots",
    ComplexMultiplicity.DOUBLE_THREE_SINGLE: "double root and 3 single roots",
    ComplexMultiplicity.TWO_DOUBLE_SINGLE: "2 double roots and a single root",
    ComplexMultiplicity.TRIPLE_TWO_SINGLE: "triple root and 2 single roots",
    ComplexMultiplicity.QUADRUPLE_SINGLE: "quadruple root and a single root",
    ComplexMultiplicity.TRIPLE_DOUBLE: "triple root and a double root",
    ComplexMultiplicity.QUINTUPLE: "quintuple root",
}


class UserError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UserError(f"not a rational number: {text!r}") from None


def _input_poly(args) -> Poly:
    if args.poly is not None:
        return parse_polynomial(args.poly)
    vals = [_parse_rational(v) for v in args.coeffs.split(",")]
    if len(vals) != 5:
        raise UserError(f"--coeffs needs 5 values p,q,r,s,t, got {len(vals)}")
    return Poly([*reversed(vals), 1])


def _quintic(args) -> QuinticCoeffs:
    f = _input_poly(args)
    if f.degree != 5:
        raise UserError(f"expected a polynomial of degree 5, got degree {f.degree}")
    return QuinticCoeffs.from_poly(f)


def _interval_json(iv: IsolatingInterval) -> dict:
    if iv.is_exact:
        return {"exact": rat(iv.lo), "multiplicity": iv.root_multiplicity}
    return {"interval": [rat(iv.lo), rat(iv.hi)], "multiplicity": iv.root_multiplicity}


def _witness_json(c: QuinticCoeffs, conf) -> Optional[list]:
    try:
        roots = witness_roots(c, conf)
    except PreconditionError:
        return None
    out = []
    for w in roots:
        if w.is_exact:
            out.append({"exact": rat(w.value), "multiplicity": w.multiplicity})
        else:
            out.append({"interval": [rat(w.value.lo), rat(w.value.hi)], "multiplicity": w.multiplicity})
    return out


def cmd_classify(args) -> dict:
    c = _quintic(args)
    inv = compute_invariants(c)
    conf = classify_real(c, inv)
    row = classify_complex(c, inv)
    out: dict[str, Any] = {
        "schema": SCHEMA,
        "command": "classify",
        "coeffs": [rat(x) for x in c.as_tuple()],
        "leaf": conf.leaf,
        "description": conf.description,
        "ordering": list(conf.ordering),
        "conjugate_pairs": list(conf.pairs),
        "complex": {"row": row.row, "name": COMPLEX_NAMES[row], "multiplicities": list(row.multiplicities)},
    }
    if conf.detail:
        out["detail"] = conf.detail
    if args.witness:
        out["witness"] = _witness_json(c, conf)
    return out


def cmd_invariants(args) -> dict:
    c = _quintic(args)
    d = compute_invariants(c).as_dict()
    vals = {k: rat(d[k]) for k in CORE_FIELDS}
    vals.update({k: None if d[k] is None else rat(d[k]) for k in OPTIONAL_FIELDS})
    return {"schema": SCHEMA, "command": "invariants", "coeffs": [rat(x) for x in c.as_tuple()],
            "invariants": vals}


def _general_poly(args) -> Poly:
    f = _input_poly(args)
    if f.degree < 1:
        raise UserError("need a non-constant polynomial")
    return f


def cmd_sturm(args) -> dict:
    f = _general_poly(args)
    chain = sturm_chain(f)
    return {
        "schema": SCHEMA,
        "command": "sturm",
        "poly": format_polynomial(f),
        "chain": [{"degree": g.degree, "poly": format_polynomial(g), "coeffs": [rat(x) for x in g.coeffs]}
                  for g in chain.polys],
        "distinct_real_roots": count_real_roots(f, chain=chain),
    }


def cmd_isolate(args) -> dict:
    f = _general_poly(args)
    ivs = isolate_real_roots(f)
    if args.width is not None:
        w = _parse_rational(args.width)
        if w <= 0:
            raise UserError("--width must be positive")
        ivs = [refine(f, iv, w) for iv in ivs]
    return {"schema": SCHEMA, "command": "isolate", "poly": format_polynomial(f),
            "roots": [_interval_json(iv) for iv in ivs]}


def cmd_verify(args) -> dict:
    c = _quintic(args)
    rep = verify_identities(c)
    out = {"schema": SCHEMA, "command": "verify-identities", "coeffs": [rat(x) for x in c.as_tuple()],
           "ok": rep.ok,
           "checks": [{"name": ch.name, "applicable": ch.applicable, "passed": ch.passed,
                       **({"detail": ch.detail} if ch.detail else {})} for ch in rep.checks]}
    if not rep.ok:
        out["_exit"] = 2
    return out


def cmd_fuzz(args) -> dict:
    if args.trials < 1:
        raise UserError("--trials must be at least 1")
    workers = args.workers if args.workers > 0 else (os.cpu_count() or 1)
    rep = cross_check(args.trials, mode=args.mode, seed=args.seed, bound=args.bound, workers=workers)
    if args.report:
        rep.write_jsonl(args.report)
    out = {
        "schema": SCHEMA,
        "command": "fuzz",
        "mode": rep.mode,
        "seed": rep.seed,
        "trials": rep.trials,
        "agreements": rep.agreements,
        "failures": [{"coeffs": [rat(x) for x in f.coeffs], "expected": f.expected, "got": f.got,
                      "reason": f.reason} for f in rep.failures],
        "leaf_counts": dict(sorted(rep.leaf_counts.items())),
        "elapsed_seconds": round(rep.elapsed, 3),
    }
    if rep.failures:
        out["_exit"] = 2
    return out


def _text(out: dict) -> str:
    cmd = out["command"]
    lines = []
    if "coeffs" in out and cmd != "fuzz":
        lines.append("coeffs (p,q,r,s,t): " + ", ".join(out["coeffs"]))
    if cmd == "classify":
        lines.append(f"leaf: {out['leaf']}")
        lines.append(f"description: {out['description']}")
        lines.append("real multiplicities (left to right): " + " ".join(map(str, out["ordering"])))
        if out["conjugate_pairs"]:
            lines.append("conjugate pairs (multiplicity): " + " ".join(map(str, out["conjugate_pairs"])))
        lines.append(f"complex class: {out['complex']['name']}")
        if "detail" in out:
            lines.append(f"detail: {out['detail']}")
        if "witness" in out:
            if out["witness"] is None:
                lines.append("witness: no multiple real root")
            for w in out["witness"] or []:
                where = w["exact"] if "exact" in w else "(" + ", ".join(w["interval"]) + ")"
                lines.append(f"witness: {where} multiplicity {w['multiplicity']}")
    elif cmd == "invariants":
        for k, v in out["invariants"].items():
            lines.append(f"{k} = {'undefined' if v is None else v}")
    elif cmd == "sturm":
        for g in out["chain"]:
            lines.append(f"[{g['degree']}] {g['poly']}")
        lines.append(f"distinct real roots: {out['distinct_real_roots']}")
    elif cmd == "isolate":
        for w in out["roots"]:
            where = w["exact"] if "exact" in w else "(" + ", ".join(w["interval"]) + ")"
            lines.append(f"{where} multiplicity {w['multiplicity']}")
        if not out["roots"]:
            lines.append("no real roots")
    elif cmd == "verify-identities":
        for ch in out["checks"]:
            verdict = "n/a" if not ch["applicable"] else ("pass" if ch["passed"] else "FAIL")
            lines.append(f"{ch['name']}: {verdict}")
    elif cmd == "fuzz":
        lines.append(f"mode {out['mode']} seed {out['seed']}: {out['agreements']}/{out['trials']} agree "
                     f"in {out['elapsed_seconds']}s")
        for f in out["failures"]:
            lines.append(f"FAIL {','.join(f['coeffs'])}: expected {f['expected']} got {f['got']} ({f['reason']})")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="quintic-atlas", description="Classify real monic quintics by root configuration.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_input(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--coeffs", help='monic quintic coefficients "p,q,r,s,t"')
        g.add_argument("--poly", help='polynomial expression, e.g. "x^5 - 6x^4 + 11x^3 - 6x^2"')
        p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("classify", help="real configuration and complex multiplicity class")
    add_input(p)
    p.add_argument("--witness", action="store_true", help="also report the real roots, exact where known")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("invariants", help="exact values of all invariants")
    add_input(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("sturm", help="Sturm chain of a polynomial")
    add_input(p)
    p.set_defaults(func=cmd_sturm)

    p = sub.add_parser("isolate", help="isolating intervals for the real roots")
    add_input(p)
    p.add_argument("--width", help="refine every interval below this width")
    p.set_defaults(func=cmd_isolate)

    p = sub.add_parser("verify-identities", help="check the invariant identities at a point")
    add_input(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="cross-check the classifier against the brute-force oracle")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("leaves", "random"), default="leaves")
    p.add_argument("--bound", type=int, default=10, help="coefficient bound in random mode")
    p.add_argument("--workers", type=int, default=1, help="worker processes; 0 means one per CPU")
    p.add_argument("--report", help="write one JSON line per trial to this path")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_fuzz)
    return ap


def _glue_values(argv: list[str]) -> list[str]:
    # "--coeffs -6,11,..." would otherwise read the value as an option
    out = []
    it = iter(argv)
    for a in it:
        if a in ("--coeffs", "--poly"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_values(argv))
    try:
        out = args.func(args)
    except (UserError, ParseError, DomainError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 2
    code = out.pop("_exit", 0)
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print(_text(out))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
