"""Run the acceptance plan and write a JSON report.

    python scripts/run_acceptance.py [--threads N] [--report PATH]
"""
import argparse
import sys
import time

from qid.harness import run_plan
from qid.harness.acceptance import acceptance_plan


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--report", default="acceptance_report.json")
    args = ap.parse_args()
    plan = acceptance_plan(args.threads)
    plan.report_path = args.report
    t0 = time.perf_counter()
    report = run_plan(plan)
    wall = time.perf_counter() - t0
    by_id: dict = {}
    for rec in report.instances:
        by_id.setdefault(rec["id"], []).append(rec["status"])
    for entry_id, statuses in by_id.items():
        bad = sum(s != "equal" for s in statuses)
        print(f"{entry_id:<18} {len(statuses):>4} instances  {'ok' if not bad else f'{bad} FAILED'}")
    print(f"aggregate: {report.aggregate}  ({len(report.instances)} instances, {wall:.1f}s)")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
