"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import json
import sys

from . import bounds, degeneracy, extremal, flags, verify
from .admissible import enumerate_admissible, hat
from .bott import oracle_table
from .grassmann import cohomology_table, snow_weight, table_rows
from .partitions import hook_table


def parse_partition(text):
    """'4,2,1' -> (4, 2, 1); '0' and '' give the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}") from None
    if any(x <= 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise argparse.ArgumentTypeError(f"parts must be positive and weakly decreasing: {text!r}")
    return tuple(parts)


def parse_factors(text):
    """'1:2,2:1' -> [(1, 2), (2, 1)]."""
    try:
        return [tuple(int(x) for x in item.split(":")) for item in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"factors look like s1:l1,s2:l2, got {text!r}") from None


def fmt_partition(lam):
    return ",".join(map(str, lam)) or "0"


def dump_json(payload):
    return json.dumps(payload, sort_keys=True)


def render(payload, fmt, tsv_rows, ascii_lines):
    if fmt == "json":
        return dump_json(payload)
    if fmt == "tsv":
        return "\n".join("\t".join(str(x) for x in row) for row in tsv_rows)
    return "\n".join(ascii_lines)


def table_payload(r, e, l, pairs):
    """Group (p, q, weight, lambda) entries; weights and lambdas stay aligned."""
    groups = {}
    for p, q, w, lam in sorted(pairs):
        g = groups.setdefault((p, q), {"p": p, "q": q, "weights": [], "lambda": []})
        g["weights"].append(list(w))
        g["lambda"].append(list(lam))
    return {"r": r, "e": e, "l": l, "groups": [groups[k] for k in sorted(groups)]}


def cmd_hooks(args):
    table = hook_table(args.partition)
    lines = [" ".join(map(str, row)) for row in table]
    if args.diagram:
        width = max((len(str(h)) for row in table for h in row), default=1)
        lines = ["".join(f"[{h:>{width}}]" for h in row) for row in table]
    payload = {"partition": list(args.partition), "hooks": table}
    return render(payload, args.format, table, lines), 0


def cmd_admissible(args):
    recs = list(enumerate_admissible(args.r, args.l, args.width))
    payload = {
        "r": args.r,
        "l": args.l,
        "width": args.width,
        "records": [
            {"lambda": list(x.lam), "h_minus": list(x.h_minus), "v_minus": list(x.v_minus), "p": x.p, "q": x.q}
            for x in recs
        ],
    }
    rows = [(fmt_partition(x.lam), fmt_partition(x.h_minus), x.p, x.q) for x in recs]
    lines = [f"{fmt_partition(x.lam):>12}  h-={list(x.h_minus)}  p={x.p} q={x.q}" for x in recs]
    return render(payload, args.format, rows, lines), 0


def cmd_hat(args):
    lam = hat(args.nu, args.l, args.r)
    payload = {"nu": list(args.nu), "l": args.l, "r": args.r, "hat": list(lam)}
    return render(payload, args.format, [(fmt_partition(lam),)], [fmt_partition(lam)]), 0


def cmd_cohomology(args):
    r, e, l = args.r, args.e, args.l
    table = cohomology_table(r, e, l)
    pairs = [(x.p, x.q, snow_weight(x, e), x.lam) for x in enumerate_admissible(r, l, e - r)]
    payload = table_payload(r, e, l, pairs)
    entries = table_rows(table)
    rows = [(p, q, fmt_partition(w), m) for p, q, w, m in entries]
    lines = [f"H^{p},{q}: S_({','.join(map(str, w))})" + (f" x{m}" if m > 1 else "") for p, q, w, m in entries]
    code = 0
    if args.oracle:
        diff = verify.table_diff(table, oracle_table(r, e, l))
        payload["oracle_match"] = not diff
        payload["diff"] = [[p, q, list(w), a, b] for p, q, w, a, b in diff]
        lines.append("oracle: match" if not diff else f"oracle: {len(diff)} differences")
        lines += [f"  p={p} q={q} {w}: snow {a}, bott {b}" for p, q, w, a, b in diff]
        rows += [("diff", p, q, fmt_partition(w), a, b) for p, q, w, a, b in diff]
        code = 1 if diff else 0
    return render(payload, args.format, rows, lines), code


def cmd_pmax(args):
    params, best = extremal.maximize(args.r, args.n, args.l)
    fam = extremal.family_partition(params, args.l)
    payload = {
        "r": args.r,
        "n": args.n,
        "l": args.l,
        "pmax": best,
        "params": dict(params._asdict()),
        "nu": list(fam),
        "hat": list(hat(fam, args.l, args.r)),
        "euclid": extremal.euclid_holds(params, args.n, args.l),
    }
    lines = [f"pmax = {best}", f"params (a,alpha,beta,c,gamma) = {tuple(params)}", f"euclid: {payload['euclid']}"]
    code = 0
    if args.brute:
        brute = extremal.brute_pmax(args.r, args.n, args.l)
        payload["brute"] = brute
        lines.append(f"brute force = {brute}")
        code = 0 if brute == best else 1
    rows = [(best, *params, payload.get("brute", ""))]
    return render(payload, args.format, rows, lines), code


def cmd_bounds(args):
    kind = args.kind
    if kind == "q":
        value = bounds.bound_Q(args.n, args.p, args.sigma, args.a, args.e, args.k)
    elif kind == "p":
        value = bounds.bound_P(args.n, args.q, args.sigma, args.a, args.e, args.k)
    elif kind == "combined":
        value = bounds.vanishes(args.n, args.p, args.q, args.sigma, args.a, args.e, args.k)
    else:
        value = bounds.bracket_pair_bound(args.ba, args.bb, args.bc, args.bd, args.r, args.s)
    payload = {"kind": kind, "value": value}
    return render(payload, args.format, [(kind, value)], [str(value)]), 0


def cmd_flag(args):
    p_max, q_max = flags.envelopes(args.r, args.factors)
    payload = {"r": args.r, "e": args.e, "factors": [list(f) for f in args.factors], "P_max": p_max, "Q_max": q_max}
    lines = [f"P_max = {p_max}", f"Q_max = {q_max}"]
    rows = [("P_max", p_max), ("Q_max", q_max)]
    if (args.p is None) != (args.q is None):
        raise argparse.ArgumentTypeError("--p and --q go together")
    if args.p is not None:
        try:
            res = flags.product_flag_cohomology(args.e, args.r, args.factors, args.p, args.q)
        except flags.OutOfWindow as exc:
            payload["status"] = "out-of-window"
            lines.append(f"H^{args.p},{args.q}: {exc}")
            rows.append(("status", "out-of-window"))
        else:
            payload["status"] = "ok"
            if res is None:
                payload["group"] = None
                lines.append(f"H^{args.p},{args.q} = 0")
                rows.append(("group", 0))
            else:
                sigma, mult, alphas = res
                payload["group"] = {"sigma": sigma, "multiplicity": mult, "alphas": [list(a) for a in alphas]}
                lines.append(f"H^{args.p},{args.q}: sigma={sigma}, multiplicity {mult}, {len(alphas)} alpha tuples")
                lines += [f"  alpha={list(a)}" for a in alphas]
                rows += [("alpha", ",".join(map(str, a)), mult) for a in alphas]
    return render(payload, args.format, rows, lines), 0


def cmd_resolution(args):
    indices = [args.i] if args.i is not None else range(degeneracy.triangle(args.e - args.k) + 1)
    terms = [t for i in indices for t in degeneracy.resolution_terms(args.e, args.k, i)]
    payload = {"e": args.e, "k": args.k, "terms": [{"i": t.i, "lambda": list(t.lam), "twist": t.twist} for t in terms]}
    rows = [(t.i, fmt_partition(t.lam), t.twist) for t in terms]
    lines = [f"R^{t.i}: S_({fmt_partition(t.lam)}) L^{t.twist}" for t in terms]
    return render(payload, args.format, rows, lines), 0


def cmd_rho(args):
    value = degeneracy.rho(args.n, args.e, args.k)
    return render({"rho": value}, args.format, [(value,)], [str(value)]), 0


def cmd_verify(args):
    names = [args.suite] if args.suite else list(verify.SUITES)
    results = {name: verify.SUITES[name]() for name in names}
    payload = {name: {"pass": not res, "failures": len(res), "witness": repr(res[0]) if res else None}
               for name, res in results.items()}
    lines, rows = [], []
    for name, res in results.items():
        status = "PASS" if not res else f"FAIL ({len(res)})"
        lines.append(f"{name}: {status}")
        if res:
            lines.append(f"  witness: {res[0]!r}")
        rows.append((name, "pass" if not res else "fail", len(res)))
    code = 0 if all(not res for res in results.values()) else 1
    return render(payload, args.format, rows, lines), code


def build_parser():
    parser = argparse.ArgumentParser(prog="grassvanish", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["json", "tsv", "ascii"], default="ascii")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hooks", help="hook lengths of a partition")
    p.add_argument("partition", type=parse_partition)
    p.add_argument("--diagram", action="store_true")
    p.set_defaults(func=cmd_hooks)

    p = sub.add_parser("admissible", help="l-admissible partitions with at most r rows")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--width", type=int)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("hat", help="admissible partition with prescribed h_minus")
    p.add_argument("--nu", type=parse_partition, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_hat)

    p = sub.add_parser("cohomology", help="H^{p,q}(G(r,e), O(l))")
    for name in ("r", "e", "l"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="compare with the Bott computation")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("pmax", help="maximal p via the extremal family")
    for name in ("r", "n", "l"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--brute", action="store_true")
    p.set_defaults(func=cmd_pmax)

    p = sub.add_parser("bounds", help="vanishing bound calculators")
    p.add_argument("kind", choices=["q", "p", "combined", "bracket"])
    for name in ("n", "p", "q", "sigma", "a", "e", "k", "r", "s"):
        p.add_argument(f"--{name}", type=int)
    for name in ("ba", "bb", "bc", "bd"):
        p.add_argument(f"--{name}", type=int, default=0, help="bracket entries for 'bracket'")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("flag", help="two-step flag formulas and envelopes")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--factors", type=parse_factors, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.set_defaults(func=cmd_flag)

    p = sub.add_parser("resolution", help="terms of the symmetric resolution")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int)
    p.set_defaults(func=cmd_resolution)

    p = sub.add_parser("rho", help="n - t(e - k)")
    for name in ("n", "e", "k"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("suite", nargs="?", choices=sorted(verify.SUITES))
    p.set_defaults(func=cmd_verify)
    return parser


REQUIRED = {
    "q": ("n", "p", "sigma", "a", "e", "k"),
    "p": ("n", "q", "sigma", "a", "e", "k"),
    "combined": ("n", "p", "q", "sigma", "a", "e", "k"),
    "bracket": ("r", "s"),
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bounds":
        missing = [n for n in REQUIRED[args.kind] if getattr(args, n) is None]
        if missing:
            parser.error(f"bounds {args.kind} needs --{', --'.join(missing)}")
    try:
        text, code = args.func(args)
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code
