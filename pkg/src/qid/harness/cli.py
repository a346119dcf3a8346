"""Command line entry point ``qid``.

Exit codes: 0 all pass, 1 mismatch or failed suite, 2 usage or plan error,
3 internal error (for example a normalizer that does not clear).
"""
from __future__ import annotations

import argparse
import json
import sys

from ..errors import DomainError, PlanInvalid, QidError
from ..identities import catalog_metadata, evaluate_side, get_entry
from ..laurent import to_text
from .bench import bench, format_table
from .limits import SUITES, limit_suite
from .plan import Plan, PlanItem, load_plan, parse_param
from .runner import run_plan


def _params(items) -> dict:
    return dict(parse_param(t) for t in items or [])


def cmd_list(args) -> int:
    print(json.dumps(catalog_metadata(), indent=2))
    return 0


def cmd_verify(args) -> int:
    if args.plan:
        plan = load_plan(args.plan)
        if args.id:
            raise PlanInvalid("use either --plan or --id, not both")
    elif args.id:
        plan = Plan([PlanItem(args.id, _params(args.param))])
    else:
        raise PlanInvalid("verify needs --id or --plan")
    if args.threads is not None:
        if args.threads < 1:
            raise PlanInvalid("--threads must be positive")
        plan.threads = args.threads
    plan.report_path = args.report or plan.report_path
    plan.golden_path = args.golden or plan.golden_path
    report = run_plan(plan, timings=not args.no_timings, perturb_rhs=args.perturb_rhs)
    if not args.quiet:
        for rec in report.instances:
            ps = " ".join(f"{k}={v}" for k, v in rec["params"].items())
            extra = f"  {rec['error']}" if rec.get("error") else ""
            print(f"{rec['id']:<18} {ps:<14} {rec['status']}{extra}")
        if report.golden is not None:
            print(f"golden: {report.golden['status']}")
    print(f"aggregate: {report.aggregate} ({len(report.instances)} instances)")
    return report.exit_code


def cmd_show(args) -> int:
    entry = get_entry(args.id)
    params = {k: lo for k, (lo, hi) in _params(args.param).items()}
    entry.check_params(params)
    print(f"# {entry.id}  normalizer: {entry.normalizer_text}")
    print("LHS:", to_text(evaluate_side(entry.id, "lhs", params)))
    print("RHS:", to_text(evaluate_side(entry.id, "rhs", params)))
    return 0


def cmd_bench(args) -> int:
    rows = bench(args.id, range(args.l_min, args.l_max + 1))
    if args.json:
        print(json.dumps([r.to_dict() for r in rows], indent=2))
    else:
        print(format_table(args.id, rows))
    ok = all((r.lhs_summands, r.rhs_summands) == (r.lhs_analytic, r.rhs_analytic) for r in rows)
    return 0 if ok else 1


def cmd_limits(args) -> int:
    res = limit_suite(args.suite, args.degree)
    print(json.dumps(res.to_dict(), indent=2))
    return 0 if res.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qid", description="Exact verification of polynomial q-series identities.")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print the catalog as JSON").set_defaults(fn=cmd_list)

    v = sub.add_parser("verify", help="verify an identity over parameter ranges")
    v.add_argument("--id")
    v.add_argument("--param", action="append", metavar="NAME=LO..HI")
    v.add_argument("--plan", help="JSON plan file")
    v.add_argument("--report", help="write the JSON report here")
    v.add_argument("--golden", help="compare against a stored report")
    v.add_argument("--threads", type=int)
    v.add_argument("--no-timings", action="store_true", help="omit timings (byte-stable reports)")
    v.add_argument("--quiet", action="store_true")
    v.add_argument("--perturb-rhs", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(fn=cmd_verify)

    s = sub.add_parser("show", help="print both normalized sides")
    s.add_argument("--id", required=True)
    s.add_argument("--param", action="append", metavar="NAME=VALUE")
    s.set_defaults(fn=cmd_show)

    b = sub.add_parser("bench", help="summand counts and timings")
    b.add_argument("--id", required=True)
    b.add_argument("--l-max", type=int, required=True)
    b.add_argument("--l-min", type=int, default=0)
    b.add_argument("--json", action="store_true")
    b.set_defaults(fn=cmd_bench)

    lim = sub.add_parser("limits", help="classical-limit suites")
    lim.add_argument("--suite", required=True, choices=SUITES)
    lim.add_argument("--degree", type=int, required=True)
    lim.set_defaults(fn=cmd_limits)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (PlanInvalid, DomainError) as exc:
        print(f"qid: {exc}", file=sys.stderr)
        return 2
    except (QidError, OSError) as exc:
        print(f"qid: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover - last resort
        print(f"qid: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
