"""Plans, reports, benchmarks and classical-limit suites."""
from .bench import BENCH_IDS, BenchRow, analytic_counts, bench
from .limits import SUITES, SuiteResult, limit_suite
from .plan import Plan, PlanItem, expand_plan, load_plan, plan_from_json
from .runner import SCHEMA, Report, compare_golden, run_plan

__all__ = [
    "BENCH_IDS", "BenchRow", "analytic_counts", "bench", "SUITES", "SuiteResult", "limit_suite",
    "Plan", "PlanItem", "expand_plan", "load_plan", "plan_from_json", "SCHEMA", "Report",
    "compare_golden", "run_plan",
]
