"""The Lebesgue finitization, its companion id2b, and the lemmas of its proof.

Normalizer proof sketches
-------------------------
lemma_LHS2: (-q;q)_{L-j} / (-q;q)_j = (-q^{j+1};q)_{L-2j} since j <= L - j.
lemma_z2j: the only denominator is (-q;q)_{L-2j}, multiplied away.
id2b single-sum form: (q^2;q^2)_{L-k} / ((q^2;q^2)_k (q;q)_{L-2k})
    = [L-k, k]_{q^2} (-q;q)_{L-2k}.
lemma_ex26: term i is q^{T_i} (q^{-2n};q)_i / (q;q)_i = [2n, i] (-1)^i q^{C(i+1,2) + C(i,2) - 2ni},
    lowest exponent -n^2 at i = n.
lemma_ex26_full: (q^{1-n}/b;q)_n = (-1/b)^n q^{-C(n,2)} (b;q)_n, so the normalizer
    turns the right side into (q, b^2, c^2; q^2)_{n/2} (b^2 c^2 q^n; q^2)_{n/2}
    using (bc;q)_n (-bc;q)_n = (b^2c^2;q^2)_n.
"""
from __future__ import annotations

from ..dense import QPoly, QSliced
from ..laurent import Poly, mono
from ..qkit import HypergeometricSpec, binom2, phi_sum_cleared, pochhammer, poly_to_qpoly, q_binomial, \
    q_binomial_q, sm, triangular
from .base import IdentityEntry, Param, SideValue
from .common import from_q, poch, qq, unit, z_graded
from .triple import triple_sum

MAIN = frozenset({"main"})
L_PARAM = (Param("L"),)
N_PARAM = (Param("n"),)


def _q_part(fs) -> QPoly:
    s = fs.expand_sliced()
    return s.slices.get((0, 0, 0, 0), QPoly())


# ----------------------------------------------------------------------
def id2_lhs(L: int) -> SideValue:
    buckets: dict = {}
    count = 0
    for j in range(L // 2 + 1):
        acc = QPoly()
        for i in range(j, L - j + 1):
            acc = acc + (q_binomial_q(L - j, i) * q_binomial_q(i, j)).shift(triangular(i) + triangular(j))
            count += 1
        buckets[2 * j] = acc.scale((-1) ** j)
    return SideValue(Poly.from_sliced(z_graded(buckets)), count)


def id2_rhs(L: int) -> SideValue:
    buckets, count = triple_sum(L, alternate_k=False, alternate_j=True, z_exp=lambda i, j: i + j)
    return SideValue(Poly.from_sliced(z_graded({ze: p for (ze, _), p in buckets.items()})), count)


def lhs2_rhs(L: int) -> SideValue:
    buckets = {}
    for j in range(L // 2 + 1):
        ratio = _q_part(poch(L - j, sign=-1, q=1) / poch(j, sign=-1, q=1))
        buckets[2 * j] = (q_binomial_q(L - j, j) * ratio).shift(j * (j + 1)).scale((-1) ** j)
    return SideValue(Poly.from_sliced(z_graded(buckets)), L // 2 + 1)


# ----------------------------------------------------------------------
def z2j_lhs(L: int, j: int) -> SideValue:
    """Left side already multiplied by (-q;q)_{L-2j}; every exponent is nonnegative."""
    acc = QPoly()
    count = 0
    for i in range(2 * j + 1):
        outer = q_binomial_q(L - i, 2 * j - i)
        inner = QPoly()
        for k in range(L - i + 1):
            inner = inner + (q_binomial_q(L + i - 2 * j, k) * q_binomial_q(L - k, i)).shift(triangular(k))
            count += 1
        acc = acc + (outer * inner).shift((i - j) ** 2).scale((-1) ** ((i - j) & 1))
    return SideValue(from_q(acc), count)


def z2j_rhs(L: int, j: int) -> SideValue:
    return SideValue(pochhammer(sm(-1, q=1), L - 2 * j) * q_binomial(L - j, j, 2), 1)


# ----------------------------------------------------------------------
def id2b_lhs(L: int) -> SideValue:
    total = QSliced()
    for j in range(L // 2 + 1):
        zq = poch(j, base_exp=2, z=2, q=2).expand_sliced()
        total = total + zq.mul_qpoly(q_binomial_q(L + 1, 2 * j + 1).shift(binom2(L - 2 * j)))
    return SideValue(Poly.from_sliced(total), L // 2 + 1)


def id2b_lhs_single(L: int) -> SideValue:
    """sum_k (-1)^k z^{2k} q^{k(k+1)} (q^2;q^2)_{L-k} / ((q^2;q^2)_k (q;q)_{L-2k})."""
    buckets = {}
    for k in range(L // 2 + 1):
        t = unit((-1) ** k, q=k * (k + 1)) * qq(L - k, 2, 2) / (qq(k, 2, 2) * qq(L - 2 * k))
        buckets[2 * k] = _q_part(t)
    return SideValue(Poly.from_sliced(z_graded(buckets)), L // 2 + 1)


def id2b_phi(L: int, k: int) -> tuple[HypergeometricSpec, Poly, Poly]:
    """The 2phi1 in base q^2 attached to z^{2k}, cleared by its lower Pochhammer.

    Returns (spec, cleared sum, cleared closed form).  With L = 2N + sigma the
    terminating parameter is q^{-L+2k} for sigma = 0 and q^{1-L+2k} for sigma = 1.
    """
    N, sigma = divmod(L, 2)
    n = N - k
    spec = HypergeometricSpec(upper=(sm(1, q=-L + 2 * k), sm(1, q=1 - L + 2 * k)),
                              lower=(sm(1, q=2 * k + 3),), argument=sm(1, q=2), n=n, base_exp=2)
    cleared = phi_sum_cleared(spec, qq(n, 2 * k + 3, 2))
    closed = pochhammer(sm(1, q=2 * N + 2 * sigma + 2), n, 2).shift(mono(q=-binom2(L - 2 * k)))
    return spec, cleared, closed


def id2b_lhs_sigma(L: int) -> SideValue:
    """Left side via the parity-split 2phi1 evaluations (summed, not closed)."""
    N = L // 2
    buckets = {}
    for k in range(N + 1):
        _, cleared, _ = id2b_phi(L, k)
        x = q_binomial_q(L + 1, 2 * k + 1) * poly_to_qpoly(cleared)
        for t in range(N - k):
            x = x.div_atom(1, 2 * k + 3 + 2 * t)
        buckets[2 * k] = x.shift(k * (k + 1) + binom2(L - 2 * k)).scale((-1) ** k)
    return SideValue(Poly.from_sliced(z_graded(buckets)), N + 1)


# ----------------------------------------------------------------------
def ex26_spec(n: int) -> HypergeometricSpec:
    # q^{T_i} = (-1)^i q^{C(i,2)} * (-q)^i, i.e. the balancing factor with argument -q
    return HypergeometricSpec(upper=(sm(1, q=-2 * n),), lower=(), argument=sm(-1, q=1), n=2 * n, quadratic=1)


def ex26_lhs(n: int) -> SideValue:
    return SideValue(phi_sum_cleared(ex26_spec(n), unit(q=n * n)), 2 * n + 1)


def ex26_rhs(n: int) -> SideValue:
    return SideValue(pochhammer(sm(1, q=1), n, 2).shift(mono(), (-1) ** n), 1)


def ex26_full_spec(n: int) -> HypergeometricSpec:
    return HypergeometricSpec(
        upper=(sm(1, q=-n), sm(1, b=1), sm(1, c=1), sm(-1, q=1 - n, b=-1, c=-1)),
        lower=(sm(1, q=1 - n, b=-1), sm(1, q=1 - n, c=-1), sm(-1, b=1, c=1)),
        argument=sm(1, q=1), n=n)


def ex26_full_normalizer(n: int):
    return (unit(b=n, c=n, q=2 * binom2(n)) * poch(n, q=1 - n, b=-1)
            * poch(n, q=1 - n, c=-1) * poch(n, sign=-1, b=1, c=1))


def ex26_full_lhs(n: int) -> SideValue:
    return SideValue(phi_sum_cleared(ex26_full_spec(n), ex26_full_normalizer(n)), n + 1)


def ex26_full_rhs(n: int) -> SideValue:
    if n % 2:
        return SideValue(Poly(), 1)
    h = n // 2
    closed = qq(h, 1, 2) * poch(h, 2, b=2) * poch(h, 2, c=2) * poch(h, 2, b=2, c=2, q=n)
    return SideValue(closed.expand(), 1)


# ----------------------------------------------------------------------
TRIPLE2 = "sum_{i,j,k} (-1)^j z^(i+j) q^(T_i+T_j+T_k) [L-i,j][L-j,k][L-k,i]"
ID2_LHS = "sum_{i,j} (-1)^j z^(2j) q^(T_i+T_j) [L-j,i][i,j]"


def entries() -> list:
    return [
        IdentityEntry(
            "id2", "Lebesgue finitization", f"{ID2_LHS} = {TRIPLE2}", L_PARAM, "unit",
            lambda L: id2_lhs(L), lambda L: id2_rhs(L), variables=("q", "z"), tags=MAIN),
        IdentityEntry(
            "lemma_LHS2", "single-sum form of the id2 left side",
            f"{ID2_LHS} = sum_j (-1)^j z^(2j) q^(j(j+1)) [L-j,j] (-q;q)_(L-j)/(-q;q)_j",
            L_PARAM, "unit", lambda L: id2_lhs(L), lambda L: lhs2_rhs(L), variables=("q", "z")),
        IdentityEntry(
            "lemma_z2j", "coefficient of z^(2j) in id2",
            "sum_{i,k} (-1)^(i-j) q^((i-j)^2+T_k) / (-q;q)_(L-2j) [L-i,2j-i][L+i-2j,k][L-k,i] = [L-j,j]_(q^2)",
            (Param("L"), Param("j", 0, lambda p: p["L"] // 2, "L//2")), "(-q;q)_(L-2j)",
            lambda L, j: z2j_lhs(L, j), lambda L, j: z2j_rhs(L, j),
            normalizer=lambda L, j: pochhammer(sm(-1, q=1), L - 2 * j)),
        IdentityEntry(
            "id2b", "companion of the Lebesgue finitization",
            f"sum_j (z^2 q^2;q^2)_j q^C(L-2j,2) [L+1,2j+1] = {TRIPLE2}", L_PARAM, "unit",
            lambda L: id2b_lhs(L), lambda L: id2_rhs(L), variables=("q", "z"), tags=MAIN,
            alternates={"single_sum": lambda L: id2b_lhs_single(L),
                        "sigma_split": lambda L: id2b_lhs_sigma(L)}),
        IdentityEntry(
            "lemma_ex26", "b, c -> infinity limit of the 4phi3 evaluation",
            "sum_{i=0}^{2n} q^(T_i) (q^-2n;q)_i/(q;q)_i = (-1)^n q^(-n^2) (q;q^2)_n",
            N_PARAM, "q^(n^2)", lambda n: ex26_lhs(n), lambda n: ex26_rhs(n),
            normalizer=lambda n: Poly.monomial(mono(q=n * n))),
        IdentityEntry(
            "lemma_ex26_full", "terminating 4phi3 with vanishing odd cases",
            "4phi3(q^-n, b, c, -q^(1-n)/bc; q^(1-n)/b, q^(1-n)/c, -bc; q, q) = "
            "(q,b^2,c^2;q^2)_(n/2) (bc;q)_n / ((b,c;q)_n (b^2c^2;q^2)_(n/2)) for even n, 0 for odd n",
            N_PARAM, "(bc)^n q^(2C(n,2)) (q^(1-n)/b, q^(1-n)/c, -bc; q)_n",
            lambda n: ex26_full_lhs(n), lambda n: ex26_full_rhs(n),
            normalizer=lambda n: ex26_full_normalizer(n).expand(), variables=("q", "b", "c")),
    ]
