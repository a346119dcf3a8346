"""The triple-product finitization, its c-deformations, the two variants, and
the q-Saalschutz lemmas behind the proof.

Normalizer proof sketches
-------------------------
lemma_bN: after cancelling identical atoms each RHS term is
    [N-j, k] * (q;q)_N / ((q;q)_j (q;q)_{N-2j}) * (b-atoms in the numerator),
and (q;q)_N / ((q;q)_j (q;q)_{N-2j}) = [N, j] (q^{N-2j+1};q)_j, a polynomial.
lemma_bN_c: the extra (c;q)_j / (cq;q)_j equals (1-c)/(1-cq^j), and (1-cq^j) is
a factor of (cq;q)_N for 1 <= j <= N; the LHS ratio cancels against (cq;q)_N.
id1b/id1c: with A = L-n, B = n-m (resp. n-|m|), the LHS ratio is
(cq;q)_{A+B} / ((cq;q)_A (cq;q)_B) with A + B <= 2L, so at most one of A, B
exceeds L and (cq;q)_L absorbs the other; on the RHS (1-cq^j) divides (cq;q)_L.
"""
from __future__ import annotations

from functools import lru_cache

from ..dense import QSliced
from ..laurent import ONE, ZERO, Poly, exact_div, mono
from ..qkit import PochhammerFactorSet as FS
from ..qkit import binom2, pochhammer, sm, triangular
from .base import IdentityEntry, Param, SideValue
from .common import atom, poch, qq, unit, z_graded
from .triple import triple_sum

MAIN = frozenset({"main"})
L_PARAM = (Param("L"),)
N_PARAM = (Param("N"),)


def _zmono(e: int, qe: int = 0, coeff: int = 1) -> Poly:
    return Poly.monomial(mono(z=e, q=qe), coeff)


# ----------------------------------------------------------------------
# id1
def id1_lhs(L: int) -> SideValue:
    """Each (z^{-n} + z^{n+1}) / (1 + z) by exact division."""
    one_plus_z = ONE + _zmono(1)
    total = ZERO
    for n in range(L + 1):
        total = total + exact_div(_zmono(-n) + _zmono(n + 1), one_plus_z).shift(mono(q=triangular(n)))
    return SideValue(total, L + 1)


def id1_lhs_cleared(L: int) -> Poly:
    """(1 + z) times the left side, written without any division."""
    total = ZERO
    for n in range(L + 1):
        t = triangular(n)
        total = total + _zmono(-n, t) + _zmono(n + 1, t)
    return total


def id1_lhs_zexp(L: int) -> SideValue:
    """Closed z-expansion: sum_{|m|<=L} sum_{n<=L-|m|} (-1)^n z^m q^{T_{n+|m|}}."""
    terms: dict = {}
    count = 0
    for m in range(0, L + 1):
        for n in range(L - m + 1):
            key = mono(z=m, q=triangular(n + m))
            terms[key] = terms.get(key, 0) + (-1) ** n
            count += 1
    for m in range(-L, 0):
        for n in range(L + m + 1):
            key = mono(z=m, q=triangular(n - m))
            terms[key] = terms.get(key, 0) + (-1) ** n
            count += 1
    return SideValue(Poly(terms), count)


def id1_rhs(L: int) -> SideValue:
    buckets, count = triple_sum(L, alternate_k=True, alternate_j=False, z_exp=lambda i, j: i - j)
    return SideValue(Poly.from_sliced(z_graded({ze: p for (ze, _), p in buckets.items()})), count)


# ----------------------------------------------------------------------
# lemma_bN and its c-deformation
def _bN_rhs_term(N: int, j: int, k: int, with_c: bool) -> FS:
    num = qq(N - j) * poch(N - j, b=1) * poch(N - k, b=1)
    den = qq(j) * poch(j, b=1) * qq(N - j - k) * poch(N - j - k, b=1) * qq(k) * qq(N - 2 * j)
    t = unit((-1) ** k, b=j, q=j * j + triangular(k)) * num / den
    if with_c:
        t = t * poch(j, c=1) / poch(j, c=1, q=1)
    return t


def _bN_rhs(N: int, norm: FS, with_c: bool) -> SideValue:
    total = QSliced()
    count = 0
    for j in range(N // 2 + 1):
        for k in range(N - j + 1):
            total = total + (norm * _bN_rhs_term(N, j, k, with_c)).expand_sliced()
            count += 1
    return SideValue(Poly.from_sliced(total), count)


def bN_lhs(N: int) -> SideValue:
    qqN = qq(N).expand_sliced()
    total = QSliced()
    for n in range(N + 1):
        total = total + qqN.shift(mono(b=n, q=binom2(n))).scale((-1) ** n)
    return SideValue(Poly.from_sliced(total), N + 1)


def bN_rhs(N: int) -> SideValue:
    return _bN_rhs(N, qq(N), with_c=False)


def bN_c_lhs(N: int) -> SideValue:
    norm = qq(N) * poch(N, c=1, q=1)
    total = QSliced()
    for n in range(N + 1):
        ratio = poch(N, c=1, q=1) / (poch(n, c=1, q=1) * poch(N - n, c=1, q=1))
        total = total + (norm * ratio * unit((-1) ** n, b=n, q=binom2(n))).expand_sliced()
    return SideValue(Poly.from_sliced(total), N + 1)


def bN_c_rhs(N: int) -> SideValue:
    return _bN_rhs(N, qq(N) * poch(N, c=1, q=1), with_c=True)


# ----------------------------------------------------------------------
# id1b, id1c
def _cq(n: int) -> FS:
    return poch(n, c=1, q=1)


def id1b_lhs(L: int) -> SideValue:
    norm = _cq(L)
    total = QSliced()
    count = 0
    for n in range(-L, L + 1):
        for m in range(-L, n + 1):
            ratio = _cq(L - m) / (_cq(L - n) * _cq(n - m))
            t = norm * ratio * unit((-1) ** ((n + m) & 1), z=m, q=triangular(n))
            total = total + t.expand_sliced()
            count += 1
    return SideValue(Poly.from_sliced(total), count)


def id1c_lhs(L: int) -> SideValue:
    norm = _cq(L)
    total = QSliced()
    count = 0
    for n in range(L + 1):
        for m in range(-n, n + 1):
            am = m if m >= 0 else -m
            ratio = _cq(L - am) / (_cq(L - n) * _cq(n - am))
            t = norm * ratio * unit((-1) ** ((n + m) & 1), z=m, q=triangular(n))
            total = total + t.expand_sliced()
            count += 1
    return SideValue(Poly.from_sliced(total), count)


def _c_weighted_rhs(L: int, group) -> SideValue:
    """Triple sum with weight (1-c)(cq;q)_L / (1 - c q^g), g = group(i, j)."""
    buckets, count = triple_sum(L, alternate_k=True, alternate_j=False,
                                z_exp=lambda i, j: i - j, group=group)

    @lru_cache(maxsize=None)
    def weight(g: int) -> QSliced:
        return (atom(c=1) * _cq(L) / atom(c=1, q=g)).expand_sliced()

    total = QSliced()
    for (ze, g), p in buckets.items():
        total = total + QSliced.from_qpoly(p, (ze, 0, 0, 0)) * weight(g)
    return SideValue(Poly.from_sliced(total), count)


def _min_ij(i: int, j: int) -> int:
    if i <= j:
        return i
    return j


def id1b_rhs(L: int) -> SideValue:
    return _c_weighted_rhs(L, lambda i, j: j)


def id1c_rhs(L: int) -> SideValue:
    return _c_weighted_rhs(L, _min_ij)


# ----------------------------------------------------------------------
# the two c -> infinity variants
def var_a_lhs(L: int) -> SideValue:
    total = ZERO
    for n in range(2 * L + 1):
        num = _zmono(-L, n * (2 * L - n + 1), (-1) ** n) + _zmono(L - n + 1)
        den = Poly.monomial(mono(q=n)) + _zmono(1)
        total = total + exact_div(num, den).shift(mono(q=triangular(L - n)))
    return SideValue(total, 2 * L + 1)


def var_a_rhs(L: int) -> SideValue:
    buckets, count = triple_sum(L, alternate_k=True, alternate_j=False,
                                z_exp=lambda i, j: i - j, q_extra=lambda i, j: -j)
    return SideValue(Poly.from_sliced(z_graded({ze: p for (ze, _), p in buckets.items()})), count)


def var_b_lhs(L: int) -> SideValue:
    total = ZERO
    for n in range(L + 1):
        first = exact_div(Poly.monomial(mono(q=(n + 1) * (L - n)), (-1) ** n) + _zmono(n + 1),
                          Poly.monomial(mono(q=L - n)) + _zmono(1))
        second = exact_div(Poly.monomial(mono(q=n * (L - n)), (-1) ** (n + 1)) + _zmono(-n),
                           ONE + _zmono(1, L - n))
        total = total + (first + second).shift(mono(q=triangular(n)))
    return SideValue(total, L + 1)


def var_b_rhs(L: int) -> SideValue:
    buckets, count = triple_sum(L, alternate_k=True, alternate_j=False,
                                z_exp=lambda i, j: i - j, q_extra=lambda i, j: -_min_ij(i, j))
    return SideValue(Poly.from_sliced(z_graded({ze: p for (ze, _), p in buckets.items()})), count)


# ----------------------------------------------------------------------
TRIPLE = "sum_{{i,j,k}} (-1)^k z^(i-j) q^(T_i+T_j+T_k{extra}) {w}[L-i,j][L-j,k][L-k,i]"


def entries() -> list:
    cq_L = lambda L: pochhammer(sm(1, c=1, q=1), L)  # noqa: E731
    return [
        IdentityEntry(
            "id1", "triple-product finitization",
            "sum_{n=0}^{L} (z^-n + z^(n+1))/(1+z) q^(T_n) = " + TRIPLE.format(extra="", w=""),
            L_PARAM, "unit; each (z^-n + z^(n+1))/(1+z) by exact division",
            lambda L: id1_lhs(L), lambda L: id1_rhs(L),
            variables=("q", "z"), tags=MAIN, alternates={"zexp": lambda L: id1_lhs_zexp(L)}),
        IdentityEntry(
            "lemma_zexp", "closed z-expansion of the id1 left side",
            "sum_{n=0}^{L} (z^-n + z^(n+1))/(1+z) q^(T_n) = sum_{|m|<=L} sum_{n<=L-|m|} (-1)^n z^m q^(T_(n+|m|))",
            L_PARAM, "unit", lambda L: id1_lhs(L), lambda L: id1_lhs_zexp(L),
            variables=("q", "z")),
        IdentityEntry(
            "lemma_bN", "b-deformed coefficient identity",
            "sum_{n<=N} (-1)^n b^n q^C(n,2) = sum_{j<=N/2} sum_{k<=N-j} (-1)^k b^j q^(j^2+T_k) "
            "(q,b;q)_(N-j) (b;q)_(N-k) / ((q,b;q)_j (q,b;q)_(N-j-k) (q;q)_k (q;q)_(N-2j))",
            N_PARAM, "(q;q)_N", lambda N: bN_lhs(N), lambda N: bN_rhs(N),
            normalizer=lambda N: pochhammer(sm(1, q=1), N), variables=("q", "b")),
        IdentityEntry(
            "lemma_bN_c", "c-deformation of lemma_bN",
            "sum_{n<=N} (-1)^n b^n q^C(n,2) (cq;q)_N/((cq;q)_n (cq;q)_(N-n)) = sum_{j,k} (-1)^k b^j q^(j^2+T_k) "
            "(c;q)_j (q,b;q)_(N-j) (b;q)_(N-k) / ((q,b,cq;q)_j (q,b;q)_(N-j-k) (q;q)_k (q;q)_(N-2j))",
            N_PARAM, "(q;q)_N (cq;q)_N", lambda N: bN_c_lhs(N), lambda N: bN_c_rhs(N),
            normalizer=lambda N: pochhammer(sm(1, q=1), N) * pochhammer(sm(1, c=1, q=1), N),
            variables=("q", "b", "c")),
        IdentityEntry(
            "id1b", "c-deformed triple-product finitization, weight at j",
            "sum_{n=-L}^{L} sum_{m=-L}^{n} (-1)^(n+m) z^m q^(T_n) (cq;q)_(L-m)/((cq;q)_(L-n) (cq;q)_(n-m)) = "
            + TRIPLE.format(extra="", w="(1-c)/(1-cq^j) "),
            L_PARAM, "(cq;q)_L", lambda L: id1b_lhs(L), lambda L: id1b_rhs(L),
            normalizer=lambda L: cq_L(L), variables=("q", "z", "c"), tags=MAIN),
        IdentityEntry(
            "id1c", "c-deformed triple-product finitization, weight at min(i,j)",
            "sum_{n=0}^{L} sum_{m=-n}^{n} (-1)^(n+m) z^m q^(T_n) (cq;q)_(L-|m|)/((cq;q)_(L-n) (cq;q)_(n-|m|)) = "
            + TRIPLE.format(extra="", w="(1-c)/(1-cq^min(i,j)) "),
            L_PARAM, "(cq;q)_L", lambda L: id1c_lhs(L), lambda L: id1c_rhs(L),
            normalizer=lambda L: cq_L(L), variables=("q", "z", "c"), tags=MAIN),
        IdentityEntry(
            "id1_var_a", "first c -> infinity variant",
            "sum_{n=0}^{2L} ((-1)^n z^-L q^(n(2L-n+1)) + z^(L-n+1))/(q^n+z) q^(T_(L-n)) = "
            + TRIPLE.format(extra="-j", w=""),
            L_PARAM, "unit; each term by exact division", lambda L: var_a_lhs(L), lambda L: var_a_rhs(L),
            variables=("q", "z"), tags=MAIN),
        IdentityEntry(
            "id1_var_b", "second c -> infinity variant",
            "sum_{n=0}^{L} { ((-1)^n q^((n+1)(L-n)) + z^(n+1))/(q^(L-n)+z) + ((-1)^(n+1) q^(n(L-n)) + z^-n)/(1+zq^(L-n)) } "
            "q^(T_n) = " + TRIPLE.format(extra="-min(i,j)", w=""),
            L_PARAM, "unit; each term by exact division", lambda L: var_b_lhs(L), lambda L: var_b_rhs(L),
            variables=("q", "z"), tags=MAIN),
    ]
