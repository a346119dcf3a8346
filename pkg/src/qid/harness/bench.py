"""Summand counts and timings for the main identities."""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from ..errors import DomainError
from ..identities import get_entry
from ..identities.triple import triple_count

BENCH_IDS = ("id1", "id2", "id2b", "id3", "id4")


def analytic_counts(entry_id: str, L: int) -> tuple[int, int]:
    """(LHS summands, RHS summands) predicted from the summation ranges."""
    if entry_id == "id1":
        return L + 1, triple_count(L)
    if entry_id == "id2":
        return sum(L - 2 * j + 1 for j in range(L // 2 + 1)), triple_count(L)
    if entry_id == "id2b":
        return L // 2 + 1, triple_count(L)
    if entry_id == "id3":
        return L + L // 2 + 1, 1
    if entry_id == "id4":
        return L + (L + 1) // 2 + 1, 1
    raise DomainError(f"bench supports {', '.join(BENCH_IDS)}; got {entry_id!r}")


@dataclass(frozen=True)
class BenchRow:
    L: int
    lhs_summands: int
    rhs_summands: int
    lhs_analytic: int
    rhs_analytic: int
    lhs_time_us: int
    rhs_time_us: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.rhs_summands, self.lhs_summands)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ratio"] = float(self.ratio)
        return d


def bench(entry_id: str, L_range) -> list:
    if entry_id not in BENCH_IDS:
        raise DomainError(f"bench supports {', '.join(BENCH_IDS)}; got {entry_id!r}")
    entry = get_entry(entry_id)
    rows = []
    for L in L_range:
        params = entry.check_params({"L": L})
        t0 = time.perf_counter()
        lv = entry.lhs(**params)
        t1 = time.perf_counter()
        rv = entry.rhs(**params)
        t2 = time.perf_counter()
        la, ra = analytic_counts(entry_id, L)
        rows.append(BenchRow(L, lv.summands, rv.summands, la, ra,
                             round((t1 - t0) * 1e6), round((t2 - t1) * 1e6)))
    return rows


def format_table(entry_id: str, rows: list) -> str:
    head = f"{'L':>4} {'lhs':>7} {'rhs':>9} {'rhs/lhs':>9} {'lhs_us':>10} {'rhs_us':>10}  analytic"
    lines = [f"# {entry_id}", head]
    for r in rows:
        ok = "ok" if (r.lhs_summands, r.rhs_summands) == (r.lhs_analytic, r.rhs_analytic) else "DIFF"
        lines.append(f"{r.L:>4} {r.lhs_summands:>7} {r.rhs_summands:>9} {float(r.ratio):>9.2f} "
                     f"{r.lhs_time_us:>10} {r.rhs_time_us:>10}  {ok}")
    return "\n".join(lines)
