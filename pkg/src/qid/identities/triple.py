"""Triple sums over three cyclically linked Gaussian binomials.

Every summand carries [L-i, j][L-j, k][L-k, i], which is nonzero exactly when
i + j <= L, j + k <= L and k + i <= L.  So i <= L, j <= L - i and
k <= min(L - i, L - j) enumerate the support with no wasted iterations.
"""
from __future__ import annotations

from collections import defaultdict
from math import comb
from typing import Callable, Hashable

from ..dense import KroneckerBox, QPoly
from ..qkit import q_binomial_q, triangular


def support(L: int):
    for i in range(L + 1):
        for j in range(L - i + 1):
            for k in range(min(L - i, L - j) + 1):
                yield i, j, k


def triple_count(L: int) -> int:
    """Closed count of the support: for fixed (i, j), k runs over L - max(i, j) + 1 values."""
    return sum(L - max(i, j) + 1 for i in range(L + 1) for j in range(L - i + 1))


def coefficient_bound(L: int) -> int:
    # Gaussian coefficients are nonnegative, so the value at q = 1 bounds every coefficient
    return sum(comb(L - i, j) * comb(L - j, k) * comb(L - k, i) for i, j, k in support(L))


def triple_sum(
    L: int,
    *,
    alternate_k: bool,
    alternate_j: bool,
    z_exp: Callable[[int, int], int],
    q_extra: Callable[[int, int], int] = lambda i, j: 0,
    group: Callable[[int, int], Hashable] = lambda i, j: None,
) -> tuple[dict, int]:
    """Sum of +-q^{T_i+T_j+T_k+extra} [L-i,j][L-j,k][L-k,i], bucketed by (z exponent, group).

    Sign is (-1)^k if ``alternate_k`` and (-1)^j if ``alternate_j``.  All
    arithmetic runs on Kronecker-packed integers; buckets are unpacked once.
    Returns (buckets, number of summands).
    """
    box = KroneckerBox(coefficient_bound(L))
    bits = box.bits

    def packed(n: int, k: int) -> int:
        return box.pack(q_binomial_q(n, k), key=(n, k))

    acc: dict = defaultdict(int)
    count = 0
    for i in range(L + 1):
        for j in range(L - i + 1):
            inner = 0
            for k in range(min(L - i, L - j) + 1):
                t = (packed(L - j, k) * packed(L - k, i)) << (bits * triangular(k))
                inner += -t if alternate_k and k & 1 else t
                count += 1
            shift = triangular(i) + triangular(j) + q_extra(i, j)
            val = (inner * packed(L - i, j)) << (bits * shift)
            if alternate_j and j & 1:
                val = -val
            acc[(z_exp(i, j), group(i, j))] += val
    buckets: dict[tuple, QPoly] = {}
    for key, v in acc.items():
        p = box.unpack(v)
        if p:
            buckets[key] = p
    return buckets, count
