"""All classical-limit suites at the acceptance degrees."""
import sys

from qid.harness import limit_suite

DEGREES = {"pentagonal": 200, "triple_product": 60, "lebesgue": 40, "stabilization": 30}


def main() -> int:
    ok = True
    for name, D in DEGREES.items():
        res = limit_suite(name, D)
        ok &= res.passed
        print(f"{name:<15} D={D:<4} {'pass' if res.passed else 'FAIL'}  {res.checks}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
