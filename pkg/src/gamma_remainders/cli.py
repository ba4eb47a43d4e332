"""Command-line entry point: evaluation, certification, monotonicity
sweeps, bound verification and comparison as reproducible batch commands.

Exit codes: 0 all checks pass; 2 a monotonicity/bound check failed beyond
tolerance; 3 certification search exhausted its depth; 64 usage error.
Diagnostics go to standard error; results to --out or standard output.
Output is byte-identical across identical invocations except for the
optional timestamp header line, which --no-header removes.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

import mpmath
from mpmath import mpf

from . import bounds as bounds_mod
from . import certify, gamma_ref, kernels, monotonicity, quadrature, registry
from .gamma_ref import CatalogFunction, EvalPrecision

EXIT_OK = 0
EXIT_CHECK_FAILED = 2
EXIT_DEPTH_EXHAUSTED = 3
EXIT_USAGE = 64

_SIMPLE_FUNCTIONS = ("theta", "vartheta", "b", "w", "H", "BigF", "BigG")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(text, out_path, no_header, timestamped=False):
    if timestamped and not no_header:
        stamp = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
        text = "# generated %s\n%s" % (stamp, text)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _precision(args, floor=25):
    digits = getattr(args, "digits", 40)
    if digits < floor:
        raise SystemExit(EXIT_USAGE)
    return EvalPrecision(working_digits=digits)


def _grid(args, default_start, default_step=0.125, default_count=64):
    start = args.grid_start if args.grid_start is not None else default_start
    return monotonicity.Grid(start, args.step, args.count)


def _add_grid_options(p, default_step=0.125, default_count=64):
    p.add_argument("--grid-start", type=float, default=None,
                   help="first grid point (default: domain start + 0.01)")
    p.add_argument("--step", type=float, default=default_step)
    p.add_argument("--count", type=int, default=default_count)


def build_parser():
    parser = _Parser(prog="gamma-remainders",
                     description="verification suite for the gamma-function "
                                 "remainder formulas")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="evaluate a catalog function")
    p.add_argument("--function", required=True,
                   help="one of %s, theorem1-item1..8, theorem2-item1..8, "
                        "or a kernel name for quadrature" % (_SIMPLE_FUNCTIONS,))
    p.add_argument("--x", required=True, type=float)
    p.add_argument("--digits", type=int, default=40)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--out")
    p.add_argument("--no-header", action="store_true")

    p = sub.add_parser("certify-am", help="absolute-monotonicity certificate")
    p.add_argument("--function", required=True, choices=registry.AM_FUNCTION_NAMES)
    p.add_argument("--max-depth", type=int, default=64)
    p.add_argument("--out")
    p.add_argument("--no-header", action="store_true")

    p = sub.add_parser("verify-cm", help="complete-monotonicity sweep")
    sel = p.add_mutually_exclusive_group(required=True)
    sel.add_argument("--theorem1", metavar="ITEM",
                     help="a key theorem1-item1..8")
    sel.add_argument("--all", action="store_true")
    p.add_argument("--max-order", type=int, default=8)
    p.add_argument("--digits", type=int, default=40)
    _add_grid_options(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.add_argument("--no-header", action="store_true")

    p = sub.add_parser("verify-lcm", help="logarithmic CM sweep")
    sel = p.add_mutually_exclusive_group(required=True)
    sel.add_argument("--theorem2", metavar="ITEM",
                     help="a key theorem2-item1..8")
    sel.add_argument("--all", action="store_true")
    p.add_argument("--max-order", type=int, default=6)
    p.add_argument("--digits", type=int, default=40)
    _add_grid_options(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.add_argument("--no-header", action="store_true")

    p = sub.add_parser("regions", help="Lambda/Phi sign and monotonicity")
    p.add_argument("--family", required=True, choices=("Lambda", "Phi"))
    p.add_argument("--p", required=True, type=float)
    p.add_argument("--q", required=True, type=float)
    p.add_argument("--digits", type=int, default=40)
    _add_grid_options(p, default_step=0.31)
    p.add_argument("--out")
    p.add_argument("--no-header", action="store_true")

    p = sub.add_parser("bounds", help="verify catalogued inequalities")
    sel = p.add_mutually_exclusive_group(required=True)
    sel.add_argument("--spec", help="catalog key, e.g. cor-2.4")
    sel.add_argument("--all", action="store_true")
    p.add_argument("--grid-lo", type=float, default=0.01)
    p.add_argument("--grid-hi", type=float, default=50.0)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--digits", type=int, default=40)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.add_argument("--no-header", action="store_true")

    p = sub.add_parser("compare", help="compare two bound envelopes")
    p.add_argument("--spec-a", required=True)
    p.add_argument("--spec-b", required=True)
    p.add_argument("--side", choices=("lower", "upper"), default="upper")
    p.add_argument("--grid-lo", type=float, default=0.5)
    p.add_argument("--grid-hi", type=float, default=1e4)
    p.add_argument("--points", type=int, default=512)
    p.add_argument("--digits", type=int, default=40)
    p.add_argument("--out")
    p.add_argument("--no-header", action="store_true")

    p = sub.add_parser("report", help="run the aggregated verification suite")
    p.add_argument("--digits", type=int, default=40)
    p.add_argument("--out")
    p.add_argument("--no-header", action="store_true")

    return parser


def _eval_target(name, x, prec):
    if name in _SIMPLE_FUNCTIONS:
        return gamma_ref.catalog_eval(CatalogFunction(name), x, prec)
    if name in registry.THEOREM1:
        return registry.THEOREM1[name][0](x, prec)
    if name in registry.THEOREM2:
        return registry.THEOREM2[name][0](x, prec)
    manifest = kernels.load_manifest()
    if name in manifest:
        return quadrature.integrate_semiinfinite(manifest[name], x, 1e-12).value
    raise KeyError(name)


def _cmd_eval(args):
    prec = _precision(args)
    try:
        value = _eval_target(args.function, args.x, prec)
    except KeyError:
        print("unknown function %r" % args.function, file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        text = json.dumps({"function": args.function, "x": args.x,
                           "value": float(value), "schema_version": 1},
                          indent=2)
        _emit(text, args.out, args.no_header)
    else:
        _emit("function,x,value\n%s,%r,%r" % (args.function, args.x, float(value)),
              args.out, args.no_header, timestamped=True)
    return EXIT_OK


def _cmd_certify(args):
    f = registry.am_function(args.function)
    result = certify.certify_absolutely_monotonic(f, max_depth=args.max_depth)
    if isinstance(result, certify.AMFailure):
        print("certification failed for %s: %s (depth %d)"
              % (args.function, result.reason, result.depth_reached),
              file=sys.stderr)
        return EXIT_DEPTH_EXHAUSTED
    _emit(certify.certificate_to_json(result), args.out, args.no_header)
    return EXIT_OK


def _cm_keys(args, table, flag):
    if getattr(args, "all"):
        return list(table)
    key = getattr(args, flag)
    if key not in table:
        print("unknown item %r" % key, file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return [key]


def _sweep(args, table, flag, lcm):
    prec = _precision(args, floor=25)
    reports = []
    for key in _cm_keys(args, table, flag):
        closure, left = table[key]
        grid = _grid(args, left + 0.01)
        fn = lambda x, closure=closure: closure(mpf(x), prec)
        if lcm:
            rep = monotonicity.check_lcm(fn, grid, args.max_order, name=key,
                                         domain_left=left, prec=prec,
                                         log_form=True)
        else:
            rep = monotonicity.check_cm(fn, grid, args.max_order, name=key,
                                        domain_left=left, prec=prec)
        reports.append(rep)
    if args.format == "json":
        text = "[\n%s\n]" % ",\n".join(monotonicity.report_to_json(r) for r in reports)
        _emit(text, args.out, args.no_header)
    else:
        parts = [monotonicity.report_to_csv(r, header=(i == 0))
                 for i, r in enumerate(reports)]
        _emit("".join(parts), args.out, args.no_header, timestamped=True)
    return EXIT_OK if all(r.all_pass for r in reports) else EXIT_CHECK_FAILED


def _cmd_regions(args):
    prec = _precision(args)
    grid = monotonicity.Grid(
        args.grid_start if args.grid_start is not None else 0.1,
        args.step, args.count)
    rep = monotonicity.check_region_claims(args.family, args.p, args.q, grid, prec)
    _emit(monotonicity.region_report_to_json(rep), args.out, args.no_header)
    return EXIT_OK if rep.all_pass else EXIT_CHECK_FAILED


def _cmd_bounds(args):
    prec = _precision(args)
    names = (list(bounds_mod.CATALOG) if args.all else [args.spec])
    for n in names:
        if n not in bounds_mod.CATALOG:
            print("unknown bound spec %r" % n, file=sys.stderr)
            return EXIT_USAGE
    rows, entries = [], []
    failed = False
    for n in names:
        spec = bounds_mod.get_spec(n)
        lo = max(args.grid_lo, spec.domain[0] + 1e-2)
        xs = bounds_mod.log_grid(lo, args.grid_hi, args.points) \
            if spec.domain[0] >= 0 else \
            [spec.domain[0] + 0.01 + i * (args.grid_hi - spec.domain[0]) / args.points
             for i in range(args.points)]
        violations = bounds_mod.verify_bound_on_grid(spec, xs, prec)
        failed = failed or bool(violations)
        entries.append({"spec": n, "points": len(xs),
                        "violations": len(violations)})
        for v in violations:
            rows.append((n, v.x, v.lower, v.target, v.upper, v.margin))
    if args.format == "json":
        _emit(bounds_mod.summary_to_json(entries), args.out, args.no_header)
    else:
        header_lines = ["spec,points,violations"]
        header_lines += ["%s,%d,%d" % (e["spec"], e["points"], e["violations"])
                         for e in entries]
        text = "\n".join(header_lines) + "\n"
        if rows:
            text += bounds_mod.results_to_csv(rows)
        _emit(text, args.out, args.no_header, timestamped=True)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _cmd_compare(args):
    prec = _precision(args)
    try:
        a = bounds_mod.get_spec(args.spec_a)
        b = bounds_mod.get_spec(args.spec_b)
    except KeyError as exc:
        print("unknown bound spec %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    xs = bounds_mod.log_grid(args.grid_lo, args.grid_hi, args.points)
    res = bounds_mod.compare_bounds(a, b, args.side, xs, prec)
    text = json.dumps({
        "spec_a": res.spec_a, "spec_b": res.spec_b, "side": res.side,
        "crossovers": [round(c, 8) for c in res.crossovers],
        "winner_at_right": res.winner_at_right,
        "right_edge_ratio": res.right_edge_ratio,
        "schema_version": 1,
    }, indent=2)
    _emit(text, args.out, args.no_header)
    return EXIT_OK


def _cmd_report(args):
    prec = _precision(args)
    lines = []
    worst = EXIT_OK

    def note(name, ok, detail=""):
        nonlocal worst
        lines.append("%-28s %s%s" % (name, "pass" if ok else "FAIL",
                                     " " + detail if detail else ""))
        if not ok:
            worst = max(worst, EXIT_CHECK_FAILED)

    for name in registry.AM_FUNCTION_NAMES:
        res = certify.certify_absolutely_monotonic(registry.am_function(name))
        ok = isinstance(res, certify.AMCertificate)
        if not ok:
            worst = max(worst, EXIT_DEPTH_EXHAUSTED)
        note("certify-am %s" % name, ok)
    for key, (closure, left) in registry.THEOREM1.items():
        grid = monotonicity.Grid(left + 0.01, 0.5, 64)
        rep = monotonicity.check_cm(lambda x, c=closure: c(mpf(x), prec),
                                    grid, 8, name=key, domain_left=left, prec=prec)
        note("verify-cm %s" % key, rep.all_pass)
    for key, (closure, left) in registry.THEOREM2.items():
        grid = monotonicity.Grid(left + 0.01, 0.5, 64)
        rep = monotonicity.check_lcm(lambda x, c=closure: c(mpf(x), prec),
                                     grid, 6, name=key, domain_left=left,
                                     prec=prec, log_form=True)
        note("verify-lcm %s" % key, rep.all_pass)
    for fam, pp, qq in (("Lambda", 2, -1), ("Lambda", 0.5, 1), ("Lambda", 2, 1),
                        ("Lambda", 0.5, 4), ("Phi", 2, -1), ("Phi", 0.5, 0.5),
                        ("Phi", 1, 2), ("Phi", 2, 1)):
        rep = monotonicity.check_region_claims(
            fam, pp, qq, monotonicity.Grid(0.1, 0.31, 64), prec)
        note("regions %s p=%g q=%g" % (fam, pp, qq), rep.all_pass, rep.claim)
    for name in ("sevli-batir", "p236-rew", "cor-2.4", "theorem2-derived"):
        spec = bounds_mod.get_spec(name)
        lo = max(0.01, spec.domain[0] + 0.01)
        xs = bounds_mod.log_grid(lo, 50.0, 200) if spec.domain[0] >= 0 else \
            [spec.domain[0] + 0.01 + i * 0.25 for i in range(200)]
        note("bounds %s" % name, not bounds_mod.verify_bound_on_grid(spec, xs, prec))
    note("bounds ii-continuous",
         not bounds_mod.verify_bound_on_grid(
             bounds_mod.get_spec("ii-continuous"), list(range(1, 21)), prec))
    _emit("\n".join(lines), args.out, args.no_header)
    return worst


def parse_args(argv):
    return build_parser().parse_args(argv)


def execute(args):
    handler = {
        "eval": _cmd_eval,
        "certify-am": _cmd_certify,
        "verify-cm": lambda a: _sweep(a, registry.THEOREM1, "theorem1", False),
        "verify-lcm": lambda a: _sweep(a, registry.THEOREM2, "theorem2", True),
        "regions": _cmd_regions,
        "bounds": _cmd_bounds,
        "compare": _cmd_compare,
        "report": _cmd_report,
    }[args.verb]
    return handler(args)


def main(argv=None):
    try:
        args = parse_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return execute(args)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
