import json
import shutil
from pathlib import Path

import pytest

from qid.dense import QPoly
from qid.errors import PlanInvalid
from qid.harness import (Plan, PlanItem, bench, compare_golden, expand_plan, limit_suite, load_plan,
                         plan_from_json, run_plan)
from qid.harness.bench import analytic_counts
from qid.harness.cli import main
from qid.harness.limits import pentagonal_series
from qid.harness.plan import parse_param
from qid.identities.triple import support
from qid.laurent import parse
from qid.qkit import q_binomial

GOLDEN = Path(__file__).parent / "golden"


def brute_triples(L):
    """Triples in a generous cube whose three Gaussian binomials are all nonzero."""
    return sum(1 for i in range(-1, L + 2) for j in range(-1, L + 2) for k in range(-1, L + 2)
               if not (q_binomial(L - i, j).is_zero or q_binomial(L - j, k).is_zero
                       or q_binomial(L - k, i).is_zero))


# plans -------------------------------------------------------------------
def test_parse_param():
    assert parse_param("L=0..25") == ("L", (0, 25))
    assert parse_param("n = 4") == ("n", (4, 4))
    with pytest.raises(PlanInvalid):
        parse_param("L=3..")


def test_expand_sorted_dedup_and_clipping():
    plan = Plan([PlanItem("id3", {"L": (2, 4)}), PlanItem("id1", {"L": (0, 1)}),
                 PlanItem("id3", {"L": (3, 5)}), PlanItem("lemma_z2j", {"L": (0, 3)})])
    got = expand_plan(plan)
    assert [i for i, _ in got][:2] == ["id1", "id1"]
    assert [p["L"] for i, p in got if i == "id3"] == [2, 3, 4, 5]
    assert [(p["L"], p["j"]) for i, p in got if i == "lemma_z2j"] == [
        (0, 0), (1, 0), (2, 0), (2, 1), (3, 0), (3, 1)]


@pytest.mark.parametrize("item", [
    PlanItem("id9", {"L": (0, 1)}),
    PlanItem("id1", {"L": (-1, 3)}),
    PlanItem("id1", {"L": (3, 1)}),
    PlanItem("id1", {"M": (0, 1)}),
    PlanItem("id1", {}),
])
def test_invalid_plans(item):
    with pytest.raises(PlanInvalid):
        expand_plan(Plan([item]))


def test_plan_json_errors(tmp_path):
    with pytest.raises(PlanInvalid):
        plan_from_json({"instances": [{"params": {}}]})
    with pytest.raises(PlanInvalid):
        plan_from_json({"instances": [], "threads": 0})
    with pytest.raises(PlanInvalid):
        plan_from_json({"instances": [{"id": "id1", "params": {"L": "0..3"}}]})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(PlanInvalid):
        load_plan(bad)


def test_empty_plan():
    report = run_plan(Plan([]), write=False)
    assert report.instances == [] and report.aggregate == "equal" and report.exit_code == 0


# reports -----------------------------------------------------------------
def test_report_schema(tmp_path):
    path = tmp_path / "r.json"
    plan = Plan([PlanItem("id1", {"L": (0, 2)})], report_path=str(path))
    report = run_plan(plan)
    doc = json.loads(path.read_text())
    assert doc["schema"] == 1 and doc["tool"]["name"] == "qid"
    assert doc["aggregate"] == "equal" and doc["counts"]["equal"] == 3
    rec = doc["instances"][1]
    assert {"lhs_digest", "rhs_digest", "lhs_time_us", "precheck"} <= set(rec)
    assert "wall_time_us" in doc and report.exit_code == 0


def test_determinism_across_threads():
    items = [PlanItem("id1", {"L": (0, 5)}), PlanItem("cubic_a0", {"n": (0, 9)}),
             PlanItem("lemma_qCV", {"n": (0, 4)})]
    one = run_plan(Plan(items, threads=1), timings=False, write=False).to_json()
    two = run_plan(Plan(items, threads=2), timings=False, write=False).to_json()
    assert one.replace('"threads": 1', '"threads": 2') == two
    assert run_plan(Plan(items), timings=False, write=False).to_json() == one


def test_golden_match_and_differ(tmp_path):
    plan = load_plan(GOLDEN / "small_plan.json")
    plan.golden_path = str(GOLDEN / "small.json")
    report = run_plan(plan, write=False)
    assert report.golden["status"] == "match" and report.aggregate == "equal"

    doc = json.loads((GOLDEN / "small.json").read_text())
    doc["instances"][0]["lhs_digest"] = "0" * 64
    doc["instances"].pop()
    edited = tmp_path / "edited.json"
    edited.write_text(json.dumps(doc))
    cmp = compare_golden([r for r in report.instances], edited)
    assert cmp["status"] == "differ"
    problems = sorted(d["problem"] for d in cmp["differences"])
    assert problems == ["differs", "not in golden"]
    plan.golden_path = str(edited)
    assert run_plan(plan, write=False).exit_code == 1


def test_golden_is_byte_stable(tmp_path):
    out = tmp_path / "again.json"
    code = main(["verify", "--plan", str(GOLDEN / "small_plan.json"), "--report", str(out),
                 "--no-timings", "--quiet"])
    assert code == 0
    assert out.read_bytes() == (GOLDEN / "small.json").read_bytes()


# CLI -----------------------------------------------------------------------
def test_cli_exit_codes(tmp_path, capsys):
    assert main(["verify", "--id", "id1", "--param", "L=0..3", "--quiet"]) == 0
    assert main(["verify", "--id", "id1", "--param", "L=-2..3"]) == 2
    assert main(["verify", "--id", "nope", "--param", "L=0"]) == 2
    assert main(["verify"]) == 2
    assert main(["verify", "--plan", str(tmp_path / "missing.json")]) == 3
    assert main(["show", "--id", "id3", "--param", "L=-1"]) == 2
    assert main(["verify", "--id", "id1", "--param", "L=0..2", "--perturb-rhs", "--quiet"]) == 1
    capsys.readouterr()


def test_cli_list_and_show(capsys):
    assert main(["list"]) == 0
    meta = json.loads(capsys.readouterr().out)
    assert len(meta) == 22
    assert main(["show", "--id", "id1", "--param", "L=1"]) == 0
    out = capsys.readouterr().out
    lhs = out.splitlines()[1].removeprefix("LHS: ")
    assert parse(lhs) == parse("1 + q*z^-1 - q + q*z")


def test_cli_bench_and_limits(capsys):
    assert main(["bench", "--id", "id3", "--l-max", "3", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[0]["L"] == 0 and rows[0]["lhs_summands"] == 1
    assert main(["limits", "--suite", "pentagonal", "--degree", "5"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"] is True
    assert main(["limits", "--suite", "pentagonal", "--degree", "-1"]) == 2


@pytest.mark.skipif(shutil.which("qid") is None, reason="console script not installed")
def test_console_script():
    import subprocess
    r = subprocess.run(["qid", "verify", "--id", "id4", "--param", "L=0..4", "--quiet"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "aggregate: equal" in r.stdout


# bench -----------------------------------------------------------------------
@pytest.mark.parametrize("L", range(8))
def test_triple_count_brute_force(L):
    assert analytic_counts("id1", L)[1] == brute_triples(L) == sum(1 for _ in support(L))


def test_bench_examples():
    # L=1 support: (0,0,0), (1,0,0), (0,1,0), (0,0,1); (1,1,1) has [0,1] = 0
    assert bench("id1", [1])[0].rhs_summands == 4
    assert bench("id3", [0])[0].lhs_summands == 1
    for entry_id in ("id2", "id2b", "id4"):
        for r in bench(entry_id, range(6)):
            assert (r.lhs_summands, r.rhs_summands) == (r.lhs_analytic, r.rhs_analytic)


# limits ------------------------------------------------------------------------
def test_limit_examples():
    assert pentagonal_series(5) == QPoly.from_items([(0, 1), (1, -1), (2, -1), (5, 1)])
    res = limit_suite("pentagonal", 5)
    assert res.passed and res.info["partitions_head"] == [1, 1, 2, 3, 5, 7]
    res = limit_suite("triple_product", 0)
    assert res.passed and parse(res.info["truncated"]) == parse("1 + z")
    for name in ("lebesgue", "stabilization"):
        assert limit_suite(name, 12).passed
