"""Command-line interface.

Every computing subcommand prints one JSON object on stdout.  Exit codes:
0 for a completed computation (even when the answer is "fails"), 1 for
domain errors (bad parameters, unmet preconditions), 2 for syntax or
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import aci as aci_mod
from . import engine, linforms, sequences
from .monomials import MonomialIdeal
from .parsing import IdealExpr, IdealSyntaxError, parse_ideal, unparse

USAGE_ERROR = 2
DOMAIN_ERROR = 1


def _print(obj, pretty: bool):
    print(json.dumps(obj, indent=2 if pretty else None, sort_keys=False))


def _monomial_str(expr: IdealExpr, m) -> str:
    parts = []
    for v, e in zip(expr.variables, m.exponents):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts) if parts else "1"


def _report_json(rep) -> dict:
    return {
        "property": rep.property_name,
        "characteristic": rep.characteristic,
        "holds": rep.holds,
        "maps": [{"source_degree": r.source_degree, "power": r.power,
                  "rank": r.rank, "source_dim": r.source_dim,
                  "target_dim": r.target_dim, "maximal": r.maximal}
                 for r in rep.maps],
        "failures": [{"source_degree": f.source_degree, "power": f.power,
                      "kind": f.kind} for f in rep.failures],
    }


def _ints(text: str, what: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise IdealSyntaxError(f"{what} must be a comma-separated integer list", 0)


def cmd_hilbert(args) -> int:
    expr = parse_ideal(args.ideal)
    _print({"ideal": unparse(expr),
            "hilbert": list(expr.ideal.hilbert_function())}, args.pretty)
    return 0


def cmd_wlp(args) -> int:
    expr = parse_ideal(args.ideal)
    rep = engine.decide_wlp(expr.ideal, characteristic=args.char)
    _print(_report_json(rep), args.pretty)
    return 0


def cmd_slp(args) -> int:
    expr = parse_ideal(args.ideal)
    rep = engine.decide_slp(expr.ideal, characteristic=args.char)
    _print(_report_json(rep), args.pretty)
    return 0


def cmd_badprimes(args) -> int:
    expr = parse_ideal(args.ideal)
    cert = engine.bad_primes(expr.ideal)
    _print({
        "ideal": unparse(expr),
        "bad_primes": sorted(cert.primes),
        "evidence": {str(p): {"source_degree": d, "rank": r, "expected": m}
                     for p, (d, r, m) in cert.evidence.items()},
        "unresolved_cofactor": cert.unresolved_cofactor,
    }, args.pretty)
    return 0


def cmd_aci(args) -> int:
    params = _ints(args.params, "--params")
    if len(params) != 6:
        raise ValueError("--params wants a,b,c,alpha,beta,gamma")
    data = aci_mod.aci_data(*params)
    out = {
        "params": dict(zip(("a", "b", "c", "alpha", "beta", "gamma"), params)),
        "conditions": list(data.conditions),
        "admissible": data.all_conditions,
    }
    if data.all_conditions:
        n = aci_mod.build_N(data)
        z = aci_mod.build_Z(data)
        from .intlinalg import determinant, factor
        det_n = determinant(n)
        det_z = determinant(z)
        out.update({
            "s": data.s,
            "blocks": {"A": data.A, "B": data.B, "C": data.C, "M": data.M},
            "det_N": det_n,
            "det_Z": det_z,
            "wlp_char0": det_n != 0,
        })
        if det_n:
            f = factor(det_n)
            out["det_factors"] = {str(p): e for p, e in sorted(f.factors.items())}
            if f.cofactor != 1:
                out["det_factors_cofactor"] = f.cofactor
        if args.emit_figure:
            from .figures import render_region
            graph = aci_mod.region_graph(data)
            matching = aci_mod.find_matching(graph)
            out["figure"] = render_region(graph, args.emit_figure,
                                          matching=matching)
            out["has_matching"] = matching is not None
    _print(out, args.pretty)
    return 0


def cmd_macmahon(args) -> int:
    _print({"a": args.a, "b": args.b, "c": args.c,
            "value": aci_mod.macmahon(args.a, args.b, args.c)}, args.pretty)
    return 0


def cmd_froberg(args) -> int:
    degrees = _ints(args.degrees, "--degrees")
    hf = linforms.froberg_prediction(args.vars, degrees, length=args.length)
    _print({"vars": args.vars, "degrees": degrees,
            "prediction": list(hf)}, args.pretty)
    return 0


def cmd_powers(args) -> int:
    exponents = _ints(args.exponents, "--exponents")
    cfg = linforms.sample_config(args.vars, exponents, seed=args.seed,
                                 bound=args.bound)
    verdict = linforms.wlp_powers(cfg, trials=args.trials)
    _print({
        "vars": args.vars,
        "exponents": exponents,
        "seed": args.seed,
        "claim": verdict.claim,
        "status": verdict.status,
        "trials": verdict.trials,
        "successes": verdict.successes,
        "hilbert": list(verdict.hilbert),
        "degrees": [{"source_degree": o.source_degree, "rank": o.rank,
                     "source_dim": o.source_dim, "target_dim": o.target_dim,
                     "maximal": o.maximal, "exact": o.exact,
                     "deficiency": o.deficiency}
                    for o in verdict.degrees],
    }, args.pretty)
    return 0


_SEQ_CHECKS = {
    "unimodal": sequences.is_unimodal,
    "strictly-unimodal": sequences.is_strictly_unimodal,
    "O": sequences.is_O_sequence,
    "diffO": sequences.is_differentiable_O,
    "SI": sequences.is_SI_sequence,
    "wlpshape": sequences.wlp_hilbert_shape,
}


def cmd_seq(args) -> int:
    values = _ints(args.values, "--values")
    fn = _SEQ_CHECKS[args.check]
    _print({"check": args.check, "values": values,
            "result": fn(values)}, args.pretty)
    return 0


def cmd_verify(args) -> int:
    from .acceptance import run_all
    ok = True
    for res in run_all(only=args.only):
        ok = ok and res.passed
        print(res.line())
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lefschetz",
        description="Weak and strong Lefschetz property calculator for "
                    "artinian monomial algebras and powers of general "
                    "linear forms.")
    ap.add_argument("--pretty", action="store_true",
                    help="indent the JSON output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert function of a monomial quotient")
    p.add_argument("ideal", help='e.g. "vars: x,y,z; gens: x^3,y^3,z^3,x*y*z"')
    p.set_defaults(fn=cmd_hilbert)

    for name, fn, blurb in (("wlp", cmd_wlp, "decide the weak Lefschetz property"),
                            ("slp", cmd_slp, "decide the strong Lefschetz property")):
        p = sub.add_parser(name, help=blurb)
        p.add_argument("ideal")
        p.add_argument("--char", type=int, default=0,
                       help="characteristic, 0 or a prime (default 0)")
        p.set_defaults(fn=fn)

    p = sub.add_parser("badprimes",
                       help="characteristics where WLP (true in char 0) fails")
    p.add_argument("ideal")
    p.set_defaults(fn=cmd_badprimes)

    p = sub.add_parser("aci", help="almost complete intersection analysis")
    p.add_argument("--params", required=True,
                   help="a,b,c,alpha,beta,gamma")
    p.add_argument("--emit-figure", metavar="PATH",
                   help="draw the lattice region (and a tiling if one "
                        "exists) to PATH")
    p.set_defaults(fn=cmd_aci)

    p = sub.add_parser("macmahon", help="plane partitions in a box")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(fn=cmd_macmahon)

    p = sub.add_parser("froberg", help="predicted Hilbert function of "
                                       "general forms")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--degrees", required=True)
    p.add_argument("--length", type=int, default=None,
                   help="prefix length when the series never terminates")
    p.set_defaults(fn=cmd_froberg)

    p = sub.add_parser("powers", help="probabilistic WLP for powers of "
                                      "general linear forms")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--exponents", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--bound", type=int, default=1000)
    p.set_defaults(fn=cmd_powers)

    p = sub.add_parser("seq", help="sequence predicates")
    p.add_argument("--check", choices=sorted(_SEQ_CHECKS), required=True)
    p.add_argument("--values", required=True)
    p.set_defaults(fn=cmd_seq)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--only", default=None,
                   help="comma-separated criterion numbers")
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except IdealSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
