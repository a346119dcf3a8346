"""Summand counts and timings for every benchmarked identity.

    python scripts/bench.py [--l-max 25]
"""
import argparse

from qid.harness import BENCH_IDS, bench
from qid.harness.bench import format_table


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--l-max", type=int, default=25)
    args = ap.parse_args()
    for entry_id in BENCH_IDS:
        print(format_table(entry_id, bench(entry_id, range(args.l_max + 1))))
        print()


if __name__ == "__main__":
    main()
