"""Classical terminating summations used along the way.

Normalizer proof sketches
-------------------------
lemma_z1: the multiplier (aq^{-m};q)_n clears every lower Pochhammer; on the
    right (aq^{-m};q)_n / (aq^{-m};q)_m = (a;q)_{n-m} for m <= n.  The extra
    q^{T_n + T_m} lifts the lowest q-exponents (from (q^{-n};q)_k/(q;q)_k and from
    the a-expansion) to zero or above.
lemma_qbthm: (q^{-n};q)_k/(q;q)_k = (-1)^k q^{C(k,2)-nk} [n,k] with minimum -T_n.
lemma_saalschutz: (abq^{1-n}/c;q)_n / (c/ab;q)_n = (-ab/c)^n q^{-C(n,2)}.
"""
from __future__ import annotations

from ..laurent import Poly, mono
from ..qkit import HypergeometricSpec, binom2, phi_sum_cleared, pochhammer, sm, triangular
from .base import IdentityEntry, Param, SideValue
from .common import poch, qq, unit

N_PARAM = (Param("n"),)


def z1_spec(n: int, m: int) -> HypergeometricSpec:
    return HypergeometricSpec(upper=(sm(1, a=1), sm(1, q=-n)), lower=(sm(1, a=1, q=-m),),
                              argument=sm(1), n=n)


def z1_normalizer(n: int, m: int):
    return unit(q=triangular(n) + triangular(m)) * poch(n, a=1, q=-m)


def z1_lhs(n: int, m: int) -> SideValue:
    return SideValue(phi_sum_cleared(z1_spec(n, m), z1_normalizer(n, m)), n + 1)


def z1_rhs(n: int, m: int) -> SideValue:
    t = unit(q=triangular(n) + triangular(m)) * poch(n, q=-n) * poch(n - m, a=1)
    return SideValue(t.expand(), 1)


def qbthm_spec(n: int) -> HypergeometricSpec:
    return HypergeometricSpec(upper=(sm(1, q=-n),), lower=(), argument=sm(1, z=1), n=n)


def qbthm_lhs(n: int) -> SideValue:
    return SideValue(phi_sum_cleared(qbthm_spec(n), unit(q=triangular(n))), n + 1)


def qbthm_rhs(n: int) -> SideValue:
    return SideValue(pochhammer(sm(1, z=1, q=-n), n).shift(mono(q=triangular(n))), 1)


def qcv_spec(n: int) -> HypergeometricSpec:
    return HypergeometricSpec(upper=(sm(1, a=1), sm(1, q=-n)), lower=(sm(1, c=1),),
                              argument=sm(1, q=1), n=n)


def qcv_lhs(n: int) -> SideValue:
    return SideValue(phi_sum_cleared(qcv_spec(n), poch(n, c=1)), n + 1)


def qcv_rhs(n: int) -> SideValue:
    # a^n (c/a;q)_n = prod_i (a - c q^i)
    out = Poly.constant(1)
    for i in range(n):
        out = out * (Poly.monomial(mono(a=1)) - Poly.monomial(mono(c=1, q=i)))
    return SideValue(out, 1)


def saalschutz_spec(n: int) -> HypergeometricSpec:
    return HypergeometricSpec(upper=(sm(1, a=1), sm(1, b=1), sm(1, q=-n)),
                              lower=(sm(1, c=1), sm(1, a=1, b=1, c=-1, q=1 - n)),
                              argument=sm(1, q=1), n=n)


def saalschutz_normalizer(n: int):
    return poch(n, c=1) * poch(n, a=1, b=1, c=-1, q=1 - n)


def saalschutz_lhs(n: int) -> SideValue:
    return SideValue(phi_sum_cleared(saalschutz_spec(n), saalschutz_normalizer(n)), n + 1)


def saalschutz_rhs(n: int) -> SideValue:
    t = unit((-1) ** n, a=n, b=n, c=-n, q=-binom2(n)) * poch(n, a=-1, c=1) * poch(n, b=-1, c=1)
    return SideValue(t.expand(), 1)


def entries() -> list:
    return [
        IdentityEntry(
            "lemma_z1", "terminating 2phi1 at argument 1",
            "2phi1(a, q^-n; aq^-m; q, 1) = (q^-n;q)_n / (aq^-m;q)_m",
            (Param("n"), Param("m", 0, lambda p: p["n"], "n")), "q^(T_n+T_m) (aq^-m;q)_n",
            lambda n, m: z1_lhs(n, m), lambda n, m: z1_rhs(n, m),
            normalizer=lambda n, m: z1_normalizer(n, m).expand(), variables=("q", "a")),
        IdentityEntry(
            "lemma_qbthm", "terminating q-binomial theorem",
            "1phi0(q^-n; -; q, z) = (zq^-n;q)_n", N_PARAM, "q^(T_n)",
            lambda n: qbthm_lhs(n), lambda n: qbthm_rhs(n),
            normalizer=lambda n: Poly.monomial(mono(q=triangular(n))), variables=("q", "z")),
        IdentityEntry(
            "lemma_qCV", "q-Chu-Vandermonde sum",
            "2phi1(a, q^-n; c; q, q) = (c/a;q)_n / (c;q)_n a^n", N_PARAM, "(c;q)_n",
            lambda n: qcv_lhs(n), lambda n: qcv_rhs(n),
            normalizer=lambda n: pochhammer(sm(1, c=1), n), variables=("q", "a", "c")),
        IdentityEntry(
            "lemma_saalschutz", "q-Saalschutz sum",
            "3phi2(a, b, q^-n; c, abq^(1-n)/c; q, q) = (c/a, c/b;q)_n / (c, c/ab;q)_n",
            N_PARAM, "(c, abq^(1-n)/c; q)_n",
            lambda n: saalschutz_lhs(n), lambda n: saalschutz_rhs(n),
            normalizer=lambda n: saalschutz_normalizer(n).expand(), variables=("q", "a", "b", "c")),
    ]
