"""Evaluate, compare and cross-check catalog entries."""
from __future__ import annotations

import random
import time
import zlib
from enum import Enum
from fractions import Fraction
from typing import Mapping

from ..errors import DomainError
from ..laurent import ONE, VARS, Poly, RationalPoint, eval_rational, mono, substitute
from ..qkit import pochhammer, q_binomial_q, sm, triangular
from .base import InstanceResult, SideValue
from .common import from_q
from .registry import get_entry


class Side(str, Enum):
    LHS = "lhs"
    RHS = "rhs"


def _side(side) -> Side:
    try:
        return Side(str(getattr(side, "value", side)).lower())
    except ValueError:
        raise DomainError(f"side must be LHS or RHS, got {side!r}") from None


def evaluate_side_value(entry_id: str, side, params: Mapping[str, int]) -> SideValue:
    entry = get_entry(entry_id)
    checked = entry.check_params(params)
    fn = entry.lhs if _side(side) is Side.LHS else entry.rhs
    return fn(**checked)


def evaluate_side(entry_id: str, side, params: Mapping[str, int]) -> Poly:
    """Normalized side of an identity as a canonical Laurent polynomial."""
    return evaluate_side_value(entry_id, side, params).poly


def evaluate_alternate(entry_id: str, name: str, params: Mapping[str, int]) -> SideValue:
    entry = get_entry(entry_id)
    if name not in entry.alternates:
        raise DomainError(f"{entry_id} has no alternate evaluation {name!r}")
    return entry.alternates[name](**entry.check_params(params))


def random_points(seed_text: str, count: int = 3) -> list:
    """Deterministic pseudo-random rational points with every coordinate nonzero."""
    rng = random.Random(zlib.crc32(seed_text.encode()))

    def value() -> Fraction:
        num = rng.choice([x for x in range(-23, 24) if x])
        return Fraction(num, rng.randint(1, 19))

    return [RationalPoint(**{v: value() for v in VARS}) for _ in range(count)]


def _precheck(lhs: Poly, rhs: Poly, seed_text: str) -> str:
    pts = random_points(seed_text)
    same = all(eval_rational(lhs, p) == eval_rational(rhs, p) for p in pts)
    return "agree" if same else "disagree"


def _seed(entry_id: str, params: Mapping[str, int]) -> str:
    return entry_id + repr(sorted(params.items()))


def verify_instance(entry_id: str, params: Mapping[str, int], *, perturb_rhs: bool = False,
                    precheck: bool = True) -> InstanceResult:
    """Compare both normalized sides exactly.

    ``perturb_rhs`` adds 1 to the constant coefficient of the right side; it is
    a negative control for the comparison machinery.
    """
    res = InstanceResult(entry_id, dict(params), "error")
    try:
        entry = get_entry(entry_id)
        checked = entry.check_params(params)
        t0 = time.perf_counter()
        lv = entry.lhs(**checked)
        t1 = time.perf_counter()
        rv = entry.rhs(**checked)
        t2 = time.perf_counter()
    except Exception as exc:  # recorded, not raised
        res.error = f"{type(exc).__name__}: {exc}"
        return res
    rhs = rv.poly + ONE if perturb_rhs else rv.poly
    diff = lv.poly - rhs
    res.lhs, res.rhs = lv.poly, rhs
    res.lhs_term_count = len(lv.poly)
    res.lhs_summand_count = lv.summands
    res.rhs_summand_count = rv.summands
    res.lhs_time, res.rhs_time = t1 - t0, t2 - t1
    res.status = "equal" if diff.is_zero else "mismatch"
    if not diff.is_zero:
        res.difference = diff
    if precheck:
        res.precheck = _precheck(lv.poly, rhs, _seed(entry_id, checked))
    return res


# ----------------------------------------------------------------------
# reductions between entries
REDUCTIONS = {
    ("id1b", "id1"): "c=0",
    ("id1c", "id1"): "c=0",
    ("lemma_bN_c", "lemma_bN"): "c=0",
    ("lemma_bN", "id1"): "assembly",
}


def _assemble_bN(L: int, side: Side) -> Poly:
    """sum_m z^m q^{T_|m|} (q^{N+1};q)_{|m|} * side(lemma_bN)|_{b=q^{|m|+1}, N=L-|m|}.

    lemma_bN sides carry (q;q)_N, so the assembled value is (q;q)_L times
    the corresponding id1 side.
    """
    total = Poly()
    for am in range(L + 1):
        N = L - am
        inner = evaluate_side("lemma_bN", side, {"N": N})
        inner = substitute(inner, "b", mono(q=am + 1)) * pochhammer(sm(1, q=N + 1), am)
        for m in ((am, -am) if am else (0,)):
            total = total + inner.shift(mono(z=m, q=triangular(am)))
    return total


def reduce_check(general: str, special: str, reduction: str, params: Mapping[str, int]) -> InstanceResult:
    """Check that ``reduction`` maps the sides of ``general`` onto those of ``special``.

    For ``c=0`` both normalized sides are compared cross-multiplied by the other
    entry's normalizer, so the normalizers need not coincide after substitution.
    """
    expected = REDUCTIONS.get((general, special))
    spelled = reduction.replace(" ", "").replace("->", "=").replace("\u21a6", "=")
    if expected is None or expected != spelled:
        raise DomainError(f"no reduction {general} -> {special} by {reduction!r}")
    res = InstanceResult(f"{general}->{special}", dict(params), "error")
    try:
        t0 = time.perf_counter()
        diffs = []
        if expected == "assembly":
            L = get_entry(special).check_params(params)["L"]
            norm = pochhammer(sm(1, q=1), L)
            for side in Side:
                diffs.append(_assemble_bN(L, side) - norm * evaluate_side(special, side, params))
        else:
            g, s = get_entry(general), get_entry(special)
            gp, sp = g.check_params(params), s.check_params(params)
            var = expected.split("=")[0]
            gnorm = substitute(g.normalizer(**gp), var, 0)
            snorm = s.normalizer(**sp)
            for side in Side:
                gs = substitute(evaluate_side(general, side, gp), var, 0)
                diffs.append(gs * snorm - gnorm * evaluate_side(special, side, sp))
        res.lhs_time = time.perf_counter() - t0
    except Exception as exc:
        res.error = f"{type(exc).__name__}: {exc}"
        return res
    bad = [d for d in diffs if not d.is_zero]
    res.status = "mismatch" if bad else "equal"
    if bad:
        res.difference = bad[0]
    return res


# ----------------------------------------------------------------------
def id2_rhs_summand(L: int, i: int, j: int, k: int) -> Poly:
    """S_{L;i,j,k} = (-1)^j z^{i+j} q^{T_i+T_j+T_k} [L-i,j][L-j,k][L-k,i]."""
    p = q_binomial_q(L - i, j) * q_binomial_q(L - j, k) * q_binomial_q(L - k, i)
    p = p.shift(triangular(i) + triangular(j) + triangular(k)).scale((-1) ** j)
    return from_q(p).shift(mono(z=i + j))


def antisymmetry_violations(L: int) -> list:
    """Triples where S_{L;i,j,k} != (-1)^{i+j} S_{L;j,i,k}; ranges over the full cube."""
    bad = []
    for i in range(L + 1):
        for j in range(L + 1):
            for k in range(L + 1):
                lhs = id2_rhs_summand(L, i, j, k)
                rhs = id2_rhs_summand(L, j, i, k)
                if (i + j) % 2:
                    rhs = -rhs
                if lhs != rhs:
                    bad.append((i, j, k))
    return bad
