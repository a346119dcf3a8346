"""Execute plans and produce deterministic JSON reports."""
from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .. import __version__
from ..identities import InstanceResult, verify_instance
from ..laurent import to_text
from .plan import Plan, expand_plan

SCHEMA = 1
TIMING_KEYS = ("lhs_time_us", "rhs_time_us", "wall_time_us")


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def instance_record(res: InstanceResult, timings: bool = True) -> dict:
    rec = {
        "id": res.id,
        "params": dict(res.params),
        "status": res.status,
        "lhs_terms": res.lhs_term_count,
        "lhs_summands": res.lhs_summand_count,
        "rhs_summands": res.rhs_summand_count,
        "precheck": res.precheck,
    }
    if res.lhs is not None:
        rec["lhs_digest"] = _digest(to_text(res.lhs))
        rec["rhs_digest"] = _digest(to_text(res.rhs))
    if res.difference is not None:
        rec["difference"] = to_text(res.difference)
    if res.error:
        rec["error"] = res.error
    if timings:
        rec["lhs_time_us"] = round(res.lhs_time * 1e6)
        rec["rhs_time_us"] = round(res.rhs_time * 1e6)
    return rec


def _strip_timings(rec: dict) -> dict:
    return {k: v for k, v in rec.items() if k not in TIMING_KEYS}


def _aggregate(records: list) -> str:
    statuses = {r["status"] for r in records}
    if "error" in statuses:
        return "error"
    if "mismatch" in statuses:
        return "mismatch"
    return "equal"


@dataclass
class Report:
    plan: dict
    instances: list
    aggregate: str
    wall_time: float = 0.0
    timings: bool = True
    golden: dict | None = None
    results: list = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        counts = {s: sum(1 for r in self.instances if r["status"] == s) for s in ("equal", "mismatch", "error")}
        doc = {
            "schema": SCHEMA,
            "tool": {"name": "qid", "version": __version__},
            "plan": self.plan,
            "instances": self.instances,
            "counts": counts,
            "aggregate": self.aggregate,
        }
        if self.golden is not None:
            doc["golden"] = self.golden
        if self.timings:
            doc["wall_time_us"] = round(self.wall_time * 1e6)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @property
    def exit_code(self) -> int:
        return {"equal": 0, "mismatch": 1, "error": 3}[self.aggregate]


def _key(rec: dict) -> str:
    return json.dumps([rec["id"], rec["params"]], sort_keys=True)


def compare_golden(records: list, golden_path: str | Path) -> dict:
    """Instance-by-instance comparison against a stored report, ignoring timings."""
    stored = json.loads(Path(golden_path).read_text())
    old = {_key(r): _strip_timings(r) for r in stored.get("instances", [])}
    new = {_key(r): _strip_timings(r) for r in records}
    diffs = []
    for k in sorted(old.keys() | new.keys()):
        if k not in new:
            diffs.append({"instance": k, "problem": "missing from run"})
        elif k not in old:
            diffs.append({"instance": k, "problem": "not in golden"})
        elif old[k] != new[k]:
            changed = sorted(f for f in old[k].keys() | new[k].keys() if old[k].get(f) != new[k].get(f))
            diffs.append({"instance": k, "problem": "differs", "fields": changed})
    return {"path": str(golden_path), "status": "match" if not diffs else "differ", "differences": diffs}


def _work(args) -> InstanceResult:
    entry_id, params, perturb = args
    return verify_instance(entry_id, params, perturb_rhs=perturb)


def run_plan(plan: Plan, *, timings: bool = True, perturb_rhs: bool = False,
             write: bool = True) -> Report:
    """Run every instance of ``plan`` (in worker processes if threads > 1).

    Results are collected in plan order, so the report does not depend on
    scheduling.  With ``timings=False`` the JSON is byte-identical across runs.
    """
    t0 = time.perf_counter()
    jobs = [(i, p, perturb_rhs) for i, p in expand_plan(plan)]
    if plan.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=plan.threads) as pool:
            results = list(pool.map(_work, jobs, chunksize=1))
    else:
        results = [_work(j) for j in jobs]
    records = [instance_record(r, timings) for r in results]
    aggregate = _aggregate(records)
    golden = None
    if plan.golden_path:
        golden = compare_golden(records, plan.golden_path)
        if golden["status"] != "match" and aggregate == "equal":
            aggregate = "mismatch"
    report = Report(plan.echo(), records, aggregate, time.perf_counter() - t0, timings, golden, results)
    if write and plan.report_path:
        Path(plan.report_path).write_text(report.to_json())
    return report
