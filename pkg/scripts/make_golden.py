"""Regenerate the small golden report used by the harness tests."""
import json
import sys
from pathlib import Path

from qid.harness import plan_from_json, run_plan

ROOT = Path(__file__).resolve().parents[1]
PLAN = {
    "instances": [
        {"id": "id1", "params": {"L": [0, 6]}},
        {"id": "id3", "params": {"L": [0, 10]}},
        {"id": "lemma_ex26", "params": {"n": [0, 5]}},
    ]
}


def main() -> int:
    out = ROOT / "tests" / "golden"
    out.mkdir(parents=True, exist_ok=True)
    (out / "small_plan.json").write_text(json.dumps(PLAN, indent=2) + "\n")
    report = run_plan(plan_from_json(PLAN), timings=False, write=False)
    (out / "small.json").write_text(report.to_json())
    print(f"wrote {len(report.instances)} instances, aggregate {report.aggregate}")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
