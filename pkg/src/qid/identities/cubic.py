"""Specializations of the cubic summation and the pentagonal finitizations.

cubic_a0 term k is (q^{-n};q)_{2k} q^k / (q, q^{-n};q)_k
    = (-1)^k q^{k(3k+1-2n)/2} [n-k, k],
whose lowest exponent is at least -n(n-1)/6; for n not 2 mod 3 that bound is an
integer and the right side becomes +-1 after multiplying by q^{n(n-1)/6}.
With n = 3L, k = j + L the normalized left side is (-1)^L times the id3 sum;
with n = 3L + 1 it is (-1)^L times the id4 sum.
"""
from __future__ import annotations

import numpy as np

from ..dense import QPoly
from ..laurent import Poly
from ..qkit import binom2, q_binomial_diagonal
from .base import IdentityEntry, Param, SideValue
from .common import from_q

N_PARAM = (Param("n"),)
MAIN = frozenset({"main"})


def cubic_shift(n: int) -> int:
    """ceil(n(n-1)/6)."""
    return -(-n * (n - 1) // 6)


def _closed(n: int) -> Poly:
    if n % 3 == 2:
        return Poly()
    return Poly.constant((-1) ** (n // 3))


def cubic_a0_lhs(n: int) -> SideValue:
    """Walk the terms by their ratio, carrying q^{shift} t_k in expanded form.

    t_{k+1}/t_k = (1-q^{2k-n})(1-q^{2k+1-n}) q / ((1-q^{k+1})(1-q^{k-n})).
    """
    running = QPoly.monomial(cubic_shift(n))
    total = running
    for k in range(n // 2):
        running = (running.mul_atom(1, 2 * k - n).mul_atom(1, 2 * k + 1 - n).shift(1)
                   .div_atom(1, k + 1).div_atom(1, k - n))
        total = total + running
    return SideValue(from_q(total), n // 2 + 1)


def cubic_a0_rhs(n: int) -> SideValue:
    return SideValue(_closed(n), 1)


def cubic_ainf_lhs(n: int) -> SideValue:
    total = QPoly()
    for k, b in enumerate(q_binomial_diagonal(n)):
        total = total + b.shift(binom2(k)).scale((-1) ** k)
    return SideValue(from_q(total), n // 2 + 1)


def cubic_ainf_rhs(n: int) -> SideValue:
    if n % 3 == 2:
        return SideValue(Poly(), 1)
    return SideValue(from_q(QPoly.monomial(n * (n - 1) // 6, (-1) ** (n // 3))), 1)


def _pentagonal_sum(L: int, extra: int, sign_of_linear: int) -> SideValue:
    """sum_j (-1)^j q^{j(3j + sign)/2} [2L - j + extra, L + j].

    [2L-j+extra, L+j] is nonzero iff -L <= j <= (L + extra)/2; these are exactly
    the anti-diagonal [n-k, k] of n = 3L + extra at k = L + j.
    """
    n = 3 * L + extra
    shift = [(k - L) * (3 * (k - L) + sign_of_linear) // 2 for k in range(n // 2 + 1)]
    buf = np.zeros(max(s + k * (n - 2 * k) for k, s in enumerate(shift)) + 1, dtype=object)
    count = 0
    for k, b in enumerate(q_binomial_diagonal(n)):
        b.shift(shift[k]).add_into(buf, 0, -1 if (k - L) & 1 else 1)
        count += 1
    return SideValue(from_q(QPoly(buf)), count)


def id3_lhs(L: int) -> SideValue:
    return _pentagonal_sum(L, 0, 1)


def id4_lhs(L: int) -> SideValue:
    return _pentagonal_sum(L, 1, -1)


def _one(**_) -> SideValue:
    return SideValue(Poly.constant(1), 1)


def entries() -> list:
    return [
        IdentityEntry(
            "cubic_a0", "a -> 0 specialization of the cubic summation",
            "sum_{k<=n/2} (q^-n;q)_(2k) / (q, q^-n;q)_k q^k = (-1)^floor(n/3) q^(-n(n-1)/6), or 0 if n = 2 mod 3",
            N_PARAM, "q^ceil(n(n-1)/6)", lambda n: cubic_a0_lhs(n), lambda n: cubic_a0_rhs(n),
            normalizer=lambda n: Poly.monomial((cubic_shift(n), 0, 0, 0, 0))),
        IdentityEntry(
            "cubic_ainf", "a -> infinity specialization of the cubic summation",
            "sum_{k<=n/2} (-1)^k q^C(k,2) [n-k,k] = (-1)^floor(n/3) q^(n(n-1)/6), or 0 if n = 2 mod 3",
            N_PARAM, "unit", lambda n: cubic_ainf_lhs(n), lambda n: cubic_ainf_rhs(n)),
        IdentityEntry(
            "id3", "pentagonal finitization",
            "sum_j (-1)^j q^(j(3j+1)/2) [2L-j, L+j] = 1", (Param("L"),), "unit",
            lambda L: id3_lhs(L), lambda L: _one(), tags=MAIN),
        IdentityEntry(
            "id4", "second pentagonal finitization",
            "sum_j (-1)^j q^(j(3j-1)/2) [2L-j+1, L+j] = 1", (Param("L"),), "unit",
            lambda L: id4_lhs(L), lambda L: _one(), tags=MAIN),
    ]
