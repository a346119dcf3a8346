"""Truncated comparisons with the classical infinite identities.

All checks are exact modulo q^(D+1).  Cut-offs come from the degree of the
first dropped term, never from fixed constants.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..dense import ONE_Q, QPoly, QSliced
from ..errors import DomainError
from ..identities import evaluate_side
from ..laurent import ONE, Poly, mono, to_text, truncate
from ..qkit import PochhammerFactorSet as FS
from ..qkit import partition_counts, sm, triangular

SUITES = ("pentagonal", "triple_product", "lebesgue", "stabilization")


@dataclass
class SuiteResult:
    suite: str
    degree: int
    checks: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"suite": self.suite, "degree": self.degree, "passed": self.passed,
                "checks": self.checks, "info": self.info}


def smallest_L(D: int) -> int:
    """Smallest L with T_L > D."""
    L = 0
    while triangular(L) <= D:
        L += 1
    return L


def euler_product(D: int) -> QPoly:
    """prod_{k=1}^{D} (1 - q^k) mod q^(D+1)."""
    p = ONE_Q
    for k in range(1, D + 1):
        p = p.mul_atom(1, k).truncate(D)
    return p


def pentagonal_series(D: int) -> QPoly:
    """sum_j (-1)^j q^{j(3j+1)/2} over every integer j with exponent <= D."""
    items = []
    for direction in (1, -1):
        j = 0 if direction == 1 else -1
        while j * (3 * j + 1) // 2 <= D:
            items.append((j * (3 * j + 1) // 2, (-1) ** (j & 1)))
            j += direction
    return QPoly.from_items(items)


def pentagonal(D: int) -> SuiteResult:
    res = SuiteResult("pentagonal", D)
    prod = euler_product(D)
    res.checks["series_equals_product"] = pentagonal_series(D) == prod
    p = partition_counts(D)
    res.checks["product_times_partitions_is_one"] = (prod * QPoly(p)).truncate(D) == ONE_Q
    res.info["partitions_head"] = p[:11]
    return res


def triple_product(D: int) -> SuiteResult:
    res = SuiteResult("triple_product", D)
    L = smallest_L(D)
    lhs = truncate(evaluate_side("id1", "lhs", {"L": L}) * (ONE + Poly.monomial(mono(z=1))), "q", D)
    prod = QSliced.from_qpoly(ONE_Q)
    for k in range(1, D + 2):
        prod = (prod.mul_atom(1, mono(q=k)).mul_atom(-1, mono(q=k - 1, z=1))
                .mul_atom(-1, mono(q=k, z=-1)).truncate_q(D))
    rhs = Poly.from_sliced(prod)
    res.checks["finite_sum_matches_product"] = lhs == rhs
    res.info.update(L=L, terms=len(lhs))
    if D <= 3:
        res.info["truncated"] = to_text(lhs)
    return res


def lebesgue(D: int) -> SuiteResult:
    """sum_j q^{T_j} (-zq;q)_j/(q;q)_j vs prod (1 + z q^{2k})(1 + q^k), both times (q;q)_J."""
    res = SuiteResult("lebesgue", D)
    J = 0
    while triangular(J + 1) <= D:
        J += 1
    lhs = QSliced()
    for j in range(J + 1):
        t = FS.monomial(mono(q=triangular(j))) * FS.poch(sm(-1, z=1, q=1), j) * FS.poch(sm(1, q=j + 1), J - j)
        lhs = lhs + t.expand_sliced().truncate_q(D)
    rhs = FS.poch(sm(1, q=1), J).expand_sliced()
    for k in range(1, D + 1):
        rhs = rhs.mul_atom(-1, mono(q=k))
        if 2 * k <= D:
            rhs = rhs.mul_atom(-1, mono(q=2 * k, z=1))
        rhs = rhs.truncate_q(D)
    res.checks["cleared_sum_matches_product"] = lhs == rhs
    res.info["J"] = J
    return res


def stabilization(D: int) -> SuiteResult:
    res = SuiteResult("stabilization", D)
    L = smallest_L(D)
    for side in ("lhs", "rhs"):
        a = truncate(evaluate_side("id1", side, {"L": L}), "q", D)
        b = truncate(evaluate_side("id1", side, {"L": L + 1}), "q", D)
        res.checks[f"id1_{side}_stable"] = a == b
    res.info["L"] = L
    return res


def limit_suite(name: str, D: int) -> SuiteResult:
    if D < 0:
        raise DomainError("degree must be nonnegative")
    fn = {"pentagonal": pentagonal, "triple_product": triple_product,
          "lebesgue": lebesgue, "stabilization": stabilization}.get(name)
    if fn is None:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return fn(D)
