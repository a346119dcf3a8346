"""Parameter boxes of the acceptance run."""
from __future__ import annotations

from .plan import Plan, PlanItem

RANGES = {
    "id1": {"L": (0, 25)},
    "id2": {"L": (0, 25)},
    "id2b": {"L": (0, 25)},
    "lemma_LHS2": {"L": (0, 25)},
    "id3": {"L": (0, 150)},
    "id4": {"L": (0, 150)},
    "id1_var_a": {"L": (0, 20)},
    "id1_var_b": {"L": (0, 20)},
    "id1b": {"L": (0, 12)},
    "id1c": {"L": (0, 12)},
    "lemma_zexp": {"L": (0, 25)},
    "lemma_bN": {"N": (0, 20)},
    "lemma_bN_c": {"N": (0, 10)},
    "lemma_z1": {"n": (0, 10), "m": (0, 10)},
    "lemma_qbthm": {"n": (0, 20)},
    "lemma_qCV": {"n": (0, 12)},
    "lemma_saalschutz": {"n": (0, 8)},
    "lemma_z2j": {"L": (0, 18)},
    "lemma_ex26": {"n": (0, 40)},
    "lemma_ex26_full": {"n": (0, 8)},
    "cubic_a0": {"n": (0, 120)},
    "cubic_ainf": {"n": (0, 120)},
}


def acceptance_plan(threads: int = 1) -> Plan:
    return Plan([PlanItem(i, dict(r)) for i, r in RANGES.items()], threads)
