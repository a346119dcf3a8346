"""q-combinatorial primitives and a terminating basic-hypergeometric term engine.

Conventions: ``(x; q^d)_n = prod_{k<n} (1 - x q^{dk})``; Gaussian binomials
vanish unless 0 <= k <= n.  Factored expressions are kept as multisets of
atoms ``(1 - sign * monomial)`` so telescoping ratios cancel before anything
is expanded.
"""
from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .dense import ONE_Q, QPoly, QSliced
from .errors import NonDivisible, ResidualDenominator, ZeroDenominatorAtom
from .laurent import UNIT, Poly, SignedMonomial, mono, mono_mul, mono_pow


def sm(sign: int = 1, **exps: int) -> SignedMonomial:
    """Signed monomial shorthand: ``sm(-1, q=1)`` is -q."""
    return SignedMonomial(sign, mono(**exps))


def triangular(n: int) -> int:
    return n * (n + 1) // 2


def binom2(n: int) -> int:
    return n * (n - 1) // 2


def qpoly_to_poly(p: QPoly, base_exp: int = 1) -> Poly:
    return Poly._raw({(e * base_exp, 0, 0, 0, 0): c for e, c in p.items()})


def poly_to_qpoly(p: Poly) -> QPoly:
    if any(e[1:] != (0, 0, 0, 0) for e, _ in p.items()):
        raise ValueError("polynomial involves variables other than q")
    return QPoly.from_items((e[0], cf) for e, cf in p.items())


# ----------------------------------------------------------------------
# Pochhammer symbols and Gaussian binomials
def pochhammer_sliced(base: SignedMonomial, n: int, base_exp: int = 1) -> QSliced:
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    out = QSliced.from_qpoly(ONE_Q)
    for k in range(n):
        e = mono_mul(base.exps, (k * base_exp, 0, 0, 0, 0))
        out = out.mul_atom(base.sign, e)
    return out


def pochhammer(base: SignedMonomial, n: int, base_exp: int = 1) -> Poly:
    """Expanded ``(base; q^base_exp)_n``."""
    return Poly.from_sliced(pochhammer_sliced(base, n, base_exp))


PASCAL_MAX = 64
_rows: list = [[ONE_Q]]
_rows_lock = threading.Lock()


def _pascal_row(n: int) -> list:
    if n < len(_rows):
        return _rows[n]
    with _rows_lock:
        while len(_rows) <= n:
            prev = _rows[-1]
            m = len(_rows)
            _rows.append([ONE_Q] + [prev[k - 1] + prev[k].shift(k) for k in range(1, m)] + [ONE_Q])
    return _rows[n]


@lru_cache(maxsize=1024)
def _q_binomial_product(n: int, k: int) -> QPoly:
    # after step i the running value is the Gaussian binomial [n-k+i, i]
    p = ONE_Q
    for i in range(1, k + 1):
        p = p.mul_atom(1, n - k + i).div_atom(1, i)
    return p


@lru_cache(maxsize=4096)
def q_binomial_q(n: int, k: int, base_exp: int = 1) -> QPoly:
    """Gaussian binomial as a dense q-polynomial in q**base_exp."""
    if k < 0 or k > n:
        return QPoly()
    if base_exp != 1:
        return q_binomial_q(n, k, 1).stretch(base_exp)
    if n <= PASCAL_MAX:
        return _pascal_row(n)[k]
    return _q_binomial_product(n, min(k, n - k))


def q_binomial(n: int, k: int, base_exp: int = 1) -> Poly:
    if base_exp < 1:
        raise ValueError("base_exp must be positive")
    return qpoly_to_poly(q_binomial_q(n, k, 1), base_exp)


def q_binomial_diagonal(n: int) -> Iterator[QPoly]:
    """Yield [n-k, k] for k = 0 .. n//2.

    Consecutive entries differ by (1-q^{n-2k})(1-q^{n-2k-1}) / ((1-q^{n-k})(1-q^{k+1})),
    applied as two atom products and two exact divisions.
    """
    p = ONE_Q
    for k in range(n // 2 + 1):
        yield p
        if k == n // 2:
            break
        p = (p.mul_atom(1, n - 2 * k).mul_atom(1, n - 2 * k - 1)
             .div_atom(1, n - k).div_atom(1, k + 1))


# ----------------------------------------------------------------------
# factored ratios
@dataclass(frozen=True, order=True)
class PochhammerAtom:
    """The factor (1 - sign * monomial)."""

    sign: int
    exps: tuple

    @property
    def is_zero(self) -> bool:
        return self.sign == 1 and self.exps == UNIT

    @property
    def q_only(self) -> bool:
        return self.exps[1:] == (0, 0, 0, 0)


class PochhammerFactorSet:
    """sign * x**unit * prod(numerator atoms) / prod(denominator atoms).

    A vanishing atom (1 - 1) in the numerator sets ``zero``; one in the
    denominator is rejected.
    """

    __slots__ = ("numerator", "denominator", "sign", "unit", "zero")

    def __init__(self, numerator=(), denominator=(), sign: int = 1, unit=UNIT, zero: bool = False):
        num = Counter(numerator)
        den = Counter(denominator)
        if any(a.is_zero for a in den):
            raise ZeroDenominatorAtom("denominator contains the factor (1 - 1)")
        if any(a.is_zero for a in num):
            zero = True
            num = Counter()
            den = Counter()
        self.numerator = num
        self.denominator = den
        self.sign = sign
        self.unit = tuple(unit)
        self.zero = zero

    @classmethod
    def one(cls) -> "PochhammerFactorSet":
        return cls()

    @classmethod
    def monomial(cls, exps=UNIT, sign: int = 1) -> "PochhammerFactorSet":
        return cls(sign=sign, unit=exps)

    @classmethod
    def poch(cls, base: SignedMonomial, n: int, base_exp: int = 1) -> "PochhammerFactorSet":
        """(base; q^base_exp)_n in factored form."""
        if n < 0:
            raise ValueError("pochhammer length must be nonnegative")
        atoms = [PochhammerAtom(base.sign, mono_mul(base.exps, (k * base_exp, 0, 0, 0, 0)))
                 for k in range(n)]
        return cls(numerator=atoms)

    def __mul__(self, other: "PochhammerFactorSet") -> "PochhammerFactorSet":
        if self.zero or other.zero:
            return PochhammerFactorSet(zero=True)
        return PochhammerFactorSet(self.numerator + other.numerator,
                                   self.denominator + other.denominator,
                                   self.sign * other.sign, mono_mul(self.unit, other.unit))

    def __truediv__(self, other: "PochhammerFactorSet") -> "PochhammerFactorSet":
        return self * other.inverse()

    def inverse(self) -> "PochhammerFactorSet":
        if self.zero:
            raise ZeroDenominatorAtom("inverse of a vanishing factor set")
        return PochhammerFactorSet(self.denominator, self.numerator, self.sign,
                                   mono_pow(self.unit, -1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PochhammerFactorSet):
            return NotImplemented
        return (self.zero, self.sign, self.unit, +self.numerator, +self.denominator) == \
            (other.zero, other.sign, other.unit, +other.numerator, +other.denominator)

    __hash__ = None

    def __repr__(self) -> str:
        if self.zero:
            return "PochhammerFactorSet(zero)"
        return (f"PochhammerFactorSet(sign={self.sign}, unit={self.unit}, "
                f"num={sorted(self.numerator.elements())}, den={sorted(self.denominator.elements())})")

    def expand_sliced(self) -> QSliced:
        """Expand to a Laurent polynomial.

        Atoms shared by numerator and denominator cancel first; remaining
        denominator atoms are removed by exact division.  If that fails the
        ratio is not a Laurent polynomial and ResidualDenominator is raised.
        """
        if self.zero:
            return QSliced()
        r = simplify_ratio(self)
        qp = QPoly.monomial(0, r.sign)
        for atom in sorted(r.numerator.elements()):
            if atom.q_only:
                qp = qp.mul_atom(atom.sign, atom.exps[0])
        try:
            for atom in sorted(r.denominator.elements()):
                if atom.q_only:
                    qp = qp.div_atom(atom.sign, atom.exps[0])
            out = QSliced.from_qpoly(qp).shift(r.unit)
            for atom in sorted(r.numerator.elements()):
                if not atom.q_only:
                    out = out.mul_atom(atom.sign, atom.exps)
            for atom in sorted(r.denominator.elements()):
                if not atom.q_only:
                    out = out.div_atom(atom.sign, atom.exps)
        except NonDivisible as exc:
            raise ResidualDenominator(f"ratio does not clear: {r!r}") from exc
        return out

    def expand(self) -> Poly:
        return Poly.from_sliced(self.expand_sliced())


FactorSet = PochhammerFactorSet


def simplify_ratio(r: PochhammerFactorSet) -> PochhammerFactorSet:
    """Cancel atoms common to numerator and denominator; unit unchanged."""
    if r.zero:
        return r
    common = r.numerator & r.denominator
    out = PochhammerFactorSet.__new__(PochhammerFactorSet)
    out.numerator = r.numerator - common
    out.denominator = r.denominator - common
    out.sign, out.unit, out.zero = r.sign, r.unit, False
    return out


# ----------------------------------------------------------------------
# terminating basic hypergeometric series
@dataclass(frozen=True)
class HypergeometricSpec:
    """Terminating series sum_k (upper;Q)_k/(Q,lower;Q)_k * argument^k, Q = q**base_exp.

    ``quadratic`` multiplies term k by ((-1)^k Q^{k(k-1)/2})**quadratic, the
    balancing factor of the general r-phi-s series.  Exactly one upper
    parameter must be Q^{-n}.
    """

    upper: tuple
    lower: tuple
    argument: SignedMonomial
    n: int
    base_exp: int = 1
    quadratic: int = 0

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        if self.n < 0:
            raise ValueError("termination index must be nonnegative")
        term = SignedMonomial(1, mono(q=-self.n * self.base_exp))
        hits = sum(1 for u in self.upper if u == term)
        if hits != 1:
            raise ValueError(f"exactly one upper parameter must be q^{-self.n * self.base_exp}")

    def ratio(self, k: int) -> PochhammerFactorSet:
        """t_{k+1} / t_k in factored form."""
        d = self.base_exp
        shift = (d * k, 0, 0, 0, 0)
        num = [PochhammerAtom(u.sign, mono_mul(u.exps, shift)) for u in self.upper]
        den = [PochhammerAtom(1, mono(q=d * (k + 1)))]
        for low in self.lower:
            atom = PochhammerAtom(low.sign, mono_mul(low.exps, shift))
            if atom.is_zero:
                raise ZeroDenominatorAtom(f"lower parameter {low} vanishes at k={k}")
            den.append(atom)
        sign = self.argument.sign * (-1) ** (self.quadratic % 2)
        unit = mono_mul(self.argument.exps, (d * k * self.quadratic, 0, 0, 0, 0))
        return PochhammerFactorSet(num, den, sign, unit)


def phi_terms(spec: HypergeometricSpec) -> list:
    """Factored terms t_0..t_n, each obtained from the previous by the term ratio."""
    terms = [PochhammerFactorSet.one()]
    for k in range(spec.n):
        terms.append(terms[-1] * spec.ratio(k))
    return terms


def _apply_ratio(running: QSliced, ratio: PochhammerFactorSet) -> QSliced:
    out = running.shift(ratio.unit).scale(ratio.sign)
    for atom in sorted(ratio.numerator.elements()):
        out = out.mul_atom(atom.sign, atom.exps)
    for atom in sorted(ratio.denominator.elements()):
        out = out.div_atom(atom.sign, atom.exps)
    return out


def phi_sum_cleared(spec: HypergeometricSpec,
                    multiplier: PochhammerFactorSet | None = None) -> Poly:
    """multiplier * sum_k t_k as an exact Laurent polynomial.

    Walks the terms incrementally: (multiplier * t_k) is carried in expanded
    form and updated by the term ratio.  Every step must divide exactly.
    """
    multiplier = multiplier or PochhammerFactorSet.one()
    try:
        running = multiplier.expand_sliced()
        total = running
        for k in range(spec.n):
            ratio = simplify_ratio(spec.ratio(k))
            if ratio.zero:
                break
            running = _apply_ratio(running, ratio)
            total = total + running
    except NonDivisible as exc:
        raise ResidualDenominator(f"multiplier does not clear {spec}") from exc
    return Poly.from_sliced(total)


def phi_sum_termwise(spec: HypergeometricSpec,
                     multiplier: PochhammerFactorSet | None = None) -> Poly:
    """Same value as :func:`phi_sum_cleared`, expanding every term from scratch."""
    multiplier = multiplier or PochhammerFactorSet.one()
    total = QSliced()
    for t in phi_terms(spec):
        total = total + (multiplier * t).expand_sliced()
    return Poly.from_sliced(total)


# ----------------------------------------------------------------------
def partition_counts(D: int) -> list:
    """p(0..D) by the coin-change recurrence over part sizes."""
    p = [1] + [0] * D
    for part in range(1, D + 1):
        for n in range(part, D + 1):
            p[n] += p[n - part]
    return p
