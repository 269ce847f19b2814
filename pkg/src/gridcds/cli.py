"""Command-line entry point.

Exit codes: 0 success, 1 a check failed, 2 usage or domain error,
3 the exact solver ran out of budget.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import bounds, construct, grid, solver
from .errors import CapacityError, GridCDSError, InconclusiveError, RangeError
from .regularize import audit_final, run_routine

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


def parse_range(text: str) -> range:
    """``"4..7"`` -> range(4, 8); ``"5"`` -> range(5, 6)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}")
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or non-positive range {text!r}")
    return range(lo, hi + 1)


def _emit(text: str, out_path=None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _read_set(path: str) -> grid.VertexSet:
    raw = sys.stdin.read() if path == "-" else open(path).read()
    stripped = raw.lstrip()
    if stripped.startswith("{"):
        return grid.loads(raw)
    return grid.parse_ascii(raw)


def _render_set(S: grid.VertexSet, fmt: str) -> str:
    if fmt == "json":
        return grid.dumps(S)
    return grid.render_ascii(S)


def cmd_formula(args) -> int:
    b = bounds.gamma_formula(args.m, args.n)
    if args.json or args.format == "json":
        print(json.dumps(b.as_dict(), sort_keys=True))
    else:
        print(f"m={b.m} n={b.n} a'={b.a_prime} r'={b.r_bar_prime} c'={b.c_prime} gamma={b.gamma}")
    return EXIT_OK


def cmd_construct(args) -> int:
    S, case = construct.build_cds(args.m, args.n)
    _emit(_render_set(S, args.format), args.out)
    if args.format == "ascii" and not args.out:
        print(f"case={case.tag} size={len(S)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    S = _read_set(args.input)
    report = {
        "m": S.dims.m,
        "n": S.dims.n,
        "is_dominating": grid.is_dominating(S),
        "is_connected": grid.is_connected(S),
        "is_cds": grid.is_cds(S),
        "cardinality": len(S),
    }
    if S.dims.m >= 4 and S.dims.n >= 4:
        report["gamma_formula"] = bounds.gamma_formula(S.dims.m, S.dims.n).gamma
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(" ".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}" for k, v in report.items()))
    return EXIT_OK if report["is_cds"] else EXIT_CHECK


def cmd_solve(args) -> int:
    res = solver.solve_gamma(args.m, args.n, budget=args.budget, ceiling=args.ceiling)
    if args.format == "json":
        doc = grid.to_json_dict(res.witness)
        doc.update(gamma=res.gamma, nodes=res.node_count)
        _emit(json.dumps(doc), args.out)
    else:
        _emit(grid.render_ascii(res.witness), args.out)
        print(f"gamma={res.gamma} nodes={res.node_count}")
    return EXIT_OK


def cmd_regularize(args) -> int:
    S = solver.normalize_origin(_read_set(args.input))
    m, n = S.dims.m, S.dims.n
    if not grid.is_cds(S):
        raise RangeError("input is not a connected dominating set")
    gamma = bounds.gamma_formula(m, n).gamma
    if len(S) != gamma:
        raise RangeError(f"input has {len(S)} vertices but a minimum CDS of {m}x{n} has {gamma}")
    D_tau, trace = run_routine(S, method=args.method)
    if args.trace:
        with open(args.trace, "w") as fh:
            json.dump(trace.to_json(), fh, indent=1)
            fh.write("\n")
    print("cases=" + ",".join(trace.cases))
    print(f"final_frame={trace.final[1]} tau={trace.tau}")
    fallback = sum(1 for s in trace.steps if s.method == "search")
    if fallback:
        print(f"search_steps={fallback}")
    if not args.audit:
        return EXIT_OK
    report = audit_final(D_tau, trace)
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(f"d={report.d} c={report.c} r_bar={report.r_bar} a={report.a}")
        for name, ok, detail in report.checks:
            print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_sweep(args) -> int:
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    status = EXIT_OK
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["m", "n", "gamma_formula", "gamma_solver", "match"])
        for m in args.m:
            for n in args.n:
                gf = bounds.gamma_formula(m, n).gamma
                if m * n > args.solve_upto:
                    w.writerow([m, n, gf, "skipped", "skipped"])
                    continue
                try:
                    gs = solver.solve_gamma(m, n, budget=args.budget, ceiling=None).gamma
                except InconclusiveError:
                    w.writerow([m, n, gf, "inconclusive", "inconclusive"])
                    status = max(status, EXIT_INCONCLUSIVE) if status != EXIT_CHECK else status
                    continue
                ok = gs == gf
                if not ok:
                    status = EXIT_CHECK
                w.writerow([m, n, gf, gs, "true" if ok else "false"])
    finally:
        if args.out:
            out.close()
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gridcds", description="Connected domination number of grid graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", help="closed-form gamma for m, n >= 4")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.add_argument("--json", action="store_true", help="same as --format json")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", help="build an optimal CDS")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a vertex set (JSON or ASCII file, '-' for stdin)")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--input", dest="input_opt")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact gamma by exhaustive search")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--budget", type=int, default=None, help="maximum search nodes")
    p.add_argument("--ceiling", type=int, default=solver.DEFAULT_CEILING, help="largest m*n accepted")
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("regularize", help="run the regularization routine on a minimum CDS")
    p.add_argument("--input", required=True)
    p.add_argument("--trace", help="write the step trace as JSON")
    p.add_argument("--audit", action="store_true", help="run the final counting audit")
    p.add_argument("--method", choices=("auto", "lemma", "search"), default="auto")
    p.add_argument("--json", action="store_true", help="print the audit as JSON")
    p.set_defaults(func=cmd_regularize)

    p = sub.add_parser("sweep", help="formula table, cross-checked by the solver on small grids")
    p.add_argument("--m", type=parse_range, required=True, help="N or LO..HI")
    p.add_argument("--n", type=parse_range, required=True, help="N or LO..HI")
    p.add_argument("--solve-upto", type=int, default=solver.DEFAULT_CEILING,
                   help="run the solver when m*n is at most this")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "verify":
        args.input = args.input_opt or args.input
        if args.input is None:
            ap.error("verify needs an input file")
    try:
        return args.func(args)
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (GridCDSError, CapacityError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
