"""Sparse Laurent polynomials over Z in the fixed alphabet (q, z, a, b, c).

A polynomial is an immutable mapping from exponent vectors (5-tuples of
signed ints, ordered q, z, a, b, c) to nonzero Python ints.  Arithmetic
stays exact; large products are routed through the dense-in-q kernel in
:mod:`qid.dense`.

Text form (used in reports and golden files) lists terms in graded-lex
order: ascending total degree, then ascending exponent tuple::

    1 - 1*q + 1*q^2*z^-1
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .dense import QSliced
from .errors import (EvaluationDivisionByZero, NegativeExponentAtZero, NonDivisible,
                     ParseError, ZeroPolynomial)

VARS = ("q", "z", "a", "b", "c")
NVARS = len(VARS)
UNIT = (0, 0, 0, 0, 0)

Exponents = tuple  # 5 ints in VARS order


def var_index(name: str) -> int:
    try:
        return VARS.index(name)
    except ValueError:
        raise ValueError(f"unknown variable {name!r}; alphabet is {VARS}") from None


def mono(**exps: int) -> Exponents:
    """Exponent vector from keyword exponents, e.g. ``mono(q=2, z=-1)``."""
    e = [0] * NVARS
    for name, k in exps.items():
        e[var_index(name)] = k
    return tuple(e)


def mono_mul(e1: Exponents, e2: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(e1, e2))


def mono_pow(e: Exponents, k: int) -> Exponents:
    return tuple(x * k for x in e)


def grlex_key(e: Exponents):
    return (sum(e), e)


# products of this many term pairs or more go through the dense kernel
_DENSE_MUL_THRESHOLD = 4096


class LaurentPolynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, int] | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(e)
            if len(e) != NVARS:
                raise ValueError(f"exponent vector must have {NVARS} entries: {e!r}")
            acc[e] = acc.get(e, 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPolynomial":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls._raw({UNIT: int(c)} if c else {})

    @classmethod
    def monomial(cls, exps: Exponents = UNIT, coeff: int = 1) -> "LaurentPolynomial":
        return cls._raw({tuple(exps): int(coeff)} if coeff else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "LaurentPolynomial":
        e = [0] * NVARS
        e[var_index(name)] = power
        return cls._raw({tuple(e): 1})

    @classmethod
    def from_sliced(cls, s: QSliced) -> "LaurentPolynomial":
        return cls._raw(dict(s.terms()))

    def to_sliced(self) -> QSliced:
        return QSliced.from_terms(self._terms.items())

    # mapping-like access ------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps: Exponents) -> int:
        return self._terms.get(tuple(exps), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPolynomial({to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(x) -> "LaurentPolynomial":
        if isinstance(x, LaurentPolynomial):
            return x
        if isinstance(x, int):
            return LaurentPolynomial.constant(x)
        raise TypeError(f"cannot combine LaurentPolynomial with {type(x).__name__}")

    def __add__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if len(other._terms) > len(self._terms):
            self, other = other, self
        acc = dict(self._terms)
        for e, c in other._terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return LaurentPolynomial._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if not self._terms or not other._terms:
            return LaurentPolynomial._raw({})
        if len(self._terms) * len(other._terms) >= _DENSE_MUL_THRESHOLD:
            return LaurentPolynomial.from_sliced(self.to_sliced() * other.to_sliced())
        acc: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3], e1[4] + e2[4])
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPolynomial._raw({e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPolynomial._raw({mono_pow(e, k): c ** (-k)})
            raise ValueError("negative powers only exist for unit monomials")
        result = LaurentPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exps: Exponents, coeff: int = 1) -> "LaurentPolynomial":
        """Multiply by the monomial ``coeff * x**exps``."""
        return LaurentPolynomial._raw({mono_mul(e, exps): c * coeff for e, c in self._terms.items()})


Poly = LaurentPolynomial
ZERO = LaurentPolynomial.constant(0)
ONE = LaurentPolynomial.constant(1)
q, z, a, b, c = (LaurentPolynomial.var(v) for v in VARS)


def add(p: Poly, r: Poly) -> Poly:
    return p + r


def mul(p: Poly, r: Poly) -> Poly:
    return p * r


# ----------------------------------------------------------------------
# exact division
def exact_div(dividend: Poly, divisor: Poly) -> Poly:
    """Return ``r`` with ``r * divisor == dividend``; raise NonDivisible otherwise.

    Leading-term elimination in one variable.  The variable is the one with
    the fewest distinct exponents in the divisor (ties: monomial leading
    coefficient first, then alphabet order); leading coefficients are
    divided recursively in the remaining variables.
    """
    dividend = Poly._coerce(dividend)
    divisor = Poly._coerce(divisor)
    if divisor.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if dividend.is_zero:
        return ZERO
    dterms = divisor._terms
    if len(dterms) == 1:
        (de, dc), = dterms.items()
        out = {}
        for e, cf in dividend._terms.items():
            quo, rem = divmod(cf, dc)
            if rem:
                raise NonDivisible(f"coefficient {cf} not divisible by {dc}")
            out[tuple(x - y for x, y in zip(e, de))] = quo
        return Poly._raw(out)

    def rank(v: int):
        exps = {e[v] for e in dterms}
        top = max(exps)
        lead_is_monomial = sum(1 for e in dterms if e[v] == top) == 1
        return (len(exps), not lead_is_monomial, v)

    v = min((i for i in range(NVARS) if len({e[i] for e in dterms}) > 1), key=rank)
    d_hi = max(e[v] for e in dterms)
    d_lo = min(e[v] for e in dterms)
    d_lead = coeff_extract(divisor, VARS[v], d_hi)
    floor = min(e[v] for e in dividend._terms) - d_lo
    unit_v = [0] * NVARS

    quotient: dict = {}
    rem = dividend
    while rem._terms:
        r_hi = max(e[v] for e in rem._terms)
        s = r_hi - d_hi
        if s < floor:
            raise NonDivisible(f"{to_text(divisor)} does not divide {_short(dividend)}")
        lead = coeff_extract(rem, VARS[v], r_hi)
        t = exact_div(lead, d_lead)
        unit_v[v] = s
        term = t.shift(tuple(unit_v))
        for e, cf in term._terms.items():
            quotient[e] = quotient.get(e, 0) + cf
        rem = rem - term * divisor
    return Poly._raw({e: cf for e, cf in quotient.items() if cf})


def _short(p: Poly, limit: int = 80) -> str:
    s = to_text(p)
    return s if len(s) <= limit else s[:limit] + " ..."


# ----------------------------------------------------------------------
# substitution, extraction, truncation
@dataclass(frozen=True)
class SignedMonomial:
    sign: int
    exps: Exponents


MonomialValue = Union[SignedMonomial, Exponents, Poly, int]


def _as_signed_monomial(value) -> SignedMonomial | None:
    if isinstance(value, SignedMonomial):
        return value
    if isinstance(value, int):
        if value == 0:
            return None
        if value in (1, -1):
            return SignedMonomial(value, UNIT)
        raise ValueError("substitution value must be zero or a signed monomial")
    if isinstance(value, Poly):
        if value.is_zero:
            return None
        if len(value) == 1:
            (e, cf), = value.items()
            if cf in (1, -1):
                return SignedMonomial(cf, e)
        raise ValueError("substitution value must be zero or a signed monomial")
    return SignedMonomial(1, tuple(value))


def substitute(p: Poly, var: str, value: MonomialValue) -> Poly:
    """Replace ``var**e`` by ``value**e`` (value zero or a signed monomial)."""
    v = var_index(var)
    m = _as_signed_monomial(value)
    acc: dict = {}
    for e, cf in p.items():
        k = e[v]
        base = e[:v] + (0,) + e[v + 1:]
        if m is None:
            if k < 0:
                raise NegativeExponentAtZero(f"{var}^{k} evaluated at {var}=0")
            if k > 0:
                continue
            new = base
        else:
            new = mono_mul(base, mono_pow(m.exps, k))
            if m.sign == -1 and k % 2:
                cf = -cf
        acc[new] = acc.get(new, 0) + cf
    return Poly._raw({e: cf for e, cf in acc.items() if cf})


def coeff_extract(p: Poly, var: str, e: int) -> Poly:
    """Coefficient of ``var**e`` as a polynomial in the remaining variables."""
    v = var_index(var)
    return Poly._raw({ex[:v] + (0,) + ex[v + 1:]: cf for ex, cf in p.items() if ex[v] == e})


def truncate(p: Poly, var: str, degree: int) -> Poly:
    v = var_index(var)
    return Poly._raw({e: cf for e, cf in p.items() if e[v] <= degree})


def degree_range(p: Poly, var: str) -> tuple[int, int]:
    if p.is_zero:
        raise ZeroPolynomial("degree range of the zero polynomial")
    v = var_index(var)
    exps = [e[v] for e in p._terms]
    return min(exps), max(exps)


# ----------------------------------------------------------------------
# evaluation
@dataclass(frozen=True)
class RationalPoint:
    """One exact rational value per variable; unspecified variables are 1."""

    q: Fraction = Fraction(1)
    z: Fraction = Fraction(1)
    a: Fraction = Fraction(1)
    b: Fraction = Fraction(1)
    c: Fraction = Fraction(1)

    def __post_init__(self):
        for name in VARS:
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def values(self) -> tuple:
        return tuple(getattr(self, v) for v in VARS)


def eval_rational(p: Poly, pt: RationalPoint) -> Fraction:
    """Exact value of ``p`` at ``pt``.

    Uses one common denominator per variable so the inner loop is integer
    only: x**e = n**(e-lo) * d**(hi-e) * n**lo / d**hi.
    """
    if p.is_zero:
        return Fraction(0)
    vals = pt.values()
    lows, highs = [], []
    for v in range(NVARS):
        exps = [e[v] for e in p._terms]
        lo, hi = min(exps), max(exps)
        if lo < 0 and vals[v] == 0:
            raise EvaluationDivisionByZero(f"{VARS[v]}^{lo} at {VARS[v]}=0")
        lows.append(lo)
        highs.append(hi)
    npow, dpow = [], []
    for v in range(NVARS):
        n, d = vals[v].numerator, vals[v].denominator
        span = highs[v] - lows[v]
        np_, dp_ = [1] * (span + 1), [1] * (span + 1)
        for i in range(1, span + 1):
            np_[i] = np_[i - 1] * n
            dp_[i] = dp_[i - 1] * d
        npow.append(np_)
        dpow.append(dp_)
    total = 0
    for e, cf in p._terms.items():
        t = cf
        for v in range(NVARS):
            k = e[v] - lows[v]
            t *= npow[v][k] * dpow[v][highs[v] - lows[v] - k]
        total += t
    scale = Fraction(1)
    for v in range(NVARS):
        n, d = vals[v].numerator, vals[v].denominator
        if lows[v]:
            scale *= Fraction(n) ** lows[v]
        scale /= Fraction(d) ** highs[v]
    return total * scale


# ----------------------------------------------------------------------
# text form
def _term_text(e: Exponents, cf: int) -> str:
    parts = [str(cf)]
    for name, k in zip(VARS, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def to_text(p: Poly) -> str:
    if p.is_zero:
        return "0"
    out = []
    for i, e in enumerate(sorted(p._terms, key=grlex_key)):
        cf = p._terms[e]
        if i == 0:
            out.append(_term_text(e, cf))
        else:
            out.append(" - " if cf < 0 else " + ")
            out.append(_term_text(e, abs(cf)))
    return "".join(out)


_FACTOR = re.compile(r"^([qzabc])(?:\^(-?\d+))?$")


def parse(text: str) -> Poly:
    """Inverse of :func:`to_text`; also accepts omitted unit coefficients."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text")
    tokens = re.split(r"\s+([+-])\s+", s)
    signs = [1] + [1 if t == "+" else -1 for t in tokens[1::2]]
    acc: dict = {}
    for sign, body in zip(signs, tokens[0::2]):
        body = body.strip()
        if body.startswith("-"):
            sign, body = -sign, body[1:]
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        factors = body.split("*")
        cf = 1
        if factors[0].isdigit():
            cf = int(factors.pop(0))
        e = [0] * NVARS
        for f in factors:
            m = _FACTOR.match(f)
            if not m:
                raise ParseError(f"bad factor {f!r} in {text!r}")
            e[var_index(m.group(1))] += int(m.group(2) or 1)
        key = tuple(e)
        acc[key] = acc.get(key, 0) + sign * cf
    return Poly._raw({e: cf for e, cf in acc.items() if cf})
