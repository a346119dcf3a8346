"""Dense-in-q working representation used on the hot paths.

``QPoly`` is a Laurent polynomial in q alone: an exponent offset plus a
numpy object array of Python ints (so coefficients never overflow).
``QSliced`` is a multivariate Laurent polynomial stored as a map from the
exponents of (z, a, b, c) to a ``QPoly``.  Every identity in the catalog is
heavy in q and light in the other variables, so this split keeps the inner
loops vectorised.

Products of long q-arrays go through Kronecker substitution: both operands
are packed into a single integer at q = 2**B, multiplied with CPython's
big-int arithmetic and unpacked with balanced digits.

Values are treated as immutable; no method mutates its operands.
"""
from __future__ import annotations

from collections import defaultdict

import numpy as np

from .errors import NonDivisible

_SMALL = 16


def _zeros(n: int) -> np.ndarray:
    return np.zeros(n, dtype=object)


def as_object_array(values) -> np.ndarray:
    arr = np.empty(len(values), dtype=object)
    arr[:] = [int(v) for v in values]
    return arr


def _maxabs(arr: np.ndarray) -> int:
    return max(abs(x) for x in arr)


def _nbytes_for(bound: int) -> int:
    # digits must satisfy |c| < 2**(B-1)
    return (bound.bit_length() + 1 + 7) // 8


def pack(coeffs: np.ndarray, nb: int) -> int:
    """Value of sum(c_i * 2**(8*nb*i)); coefficients may be negative."""
    zero = bytes(nb)
    pos = b"".join([x.to_bytes(nb, "little") if x > 0 else zero for x in coeffs])
    value = int.from_bytes(pos, "little")
    if any(x < 0 for x in coeffs):
        neg = b"".join([(-x).to_bytes(nb, "little") if x < 0 else zero for x in coeffs])
        value -= int.from_bytes(neg, "little")
    return value


def unpack(value: int, nb: int, n: int | None = None) -> np.ndarray:
    """Inverse of :func:`pack` assuming every digit satisfies |c| < 2**(8*nb-1)."""
    if value == 0:
        return _zeros(0)
    bits = 8 * nb
    if n is None:
        n = abs(value).bit_length() // bits + 2
    half = 1 << (bits - 1)
    bias = int.from_bytes((bytes(nb - 1) + b"\x80") * n, "little")
    raw = (value + bias).to_bytes(n * nb, "little")
    fb = int.from_bytes
    return as_object_array([fb(raw[i:i + nb], "little") - half for i in range(0, n * nb, nb)])


def convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if len(a) > len(b):
        a, b = b, a
    if len(a) <= _SMALL:
        out = _zeros(len(a) + len(b) - 1)
        nb_ = len(b)
        for i, c in enumerate(a):
            if c:
                out[i:i + nb_] += c * b
        return out
    n = len(a) + len(b) - 1
    nb = _nbytes_for(_maxabs(a) * _maxabs(b) * len(a))
    return unpack(pack(a, nb) * pack(b, nb), nb, n)


class QPoly:
    """Laurent polynomial in q: ``sum(coeffs[i] * q**(offset + i))``."""

    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs=None, offset: int = 0, *, trusted: bool = False):
        if coeffs is None:
            coeffs = _zeros(0)
        elif not isinstance(coeffs, np.ndarray) or coeffs.dtype != object:
            coeffs = as_object_array(coeffs)
        if not trusted:
            nz = np.flatnonzero(coeffs)
            if len(nz) == 0:
                coeffs, offset = _zeros(0), 0
            else:
                lo, hi = int(nz[0]), int(nz[-1])
                if lo or hi != len(coeffs) - 1:
                    coeffs = coeffs[lo:hi + 1]
                offset += lo
        self.coeffs = coeffs
        self.offset = offset

    # construction -------------------------------------------------------
    @classmethod
    def monomial(cls, exponent: int = 0, coeff: int = 1) -> "QPoly":
        if coeff == 0:
            return cls()
        return cls(as_object_array([coeff]), exponent, trusted=True)

    @classmethod
    def from_items(cls, items) -> "QPoly":
        items = [(e, c) for e, c in items if c]
        if not items:
            return cls()
        lo = min(e for e, _ in items)
        hi = max(e for e, _ in items)
        arr = _zeros(hi - lo + 1)
        for e, c in items:
            arr[e - lo] += c
        return cls(arr, lo)

    # inspection ---------------------------------------------------------
    def __bool__(self) -> bool:
        return len(self.coeffs) > 0

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def top(self) -> int:
        return self.offset + len(self.coeffs) - 1

    def items(self):
        off = self.offset
        for i, c in enumerate(self.coeffs):
            if c:
                yield off + i, c

    def coefficient(self, e: int) -> int:
        i = e - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return (self.offset == other.offset and len(self.coeffs) == len(other.coeffs)
                and bool(np.all(self.coeffs == other.coeffs)))

    __hash__ = None

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r}, offset={self.offset})"

    # arithmetic ---------------------------------------------------------
    def __neg__(self) -> "QPoly":
        return QPoly(-self.coeffs, self.offset, trusted=True)

    def scale(self, k: int) -> "QPoly":
        if k == 0 or not self:
            return QPoly()
        if k == 1:
            return self
        return QPoly(self.coeffs * k, self.offset, trusted=True)

    def shift(self, e: int) -> "QPoly":
        if e == 0 or not self:
            return self
        return QPoly(self.coeffs, self.offset + e, trusted=True)

    def _combine(self, other: "QPoly", sign: int) -> "QPoly":
        if not other:
            return self
        if not self:
            return other if sign == 1 else -other
        lo = min(self.offset, other.offset)
        hi = max(self.top, other.top)
        out = _zeros(hi - lo + 1)
        i = self.offset - lo
        out[i:i + len(self.coeffs)] += self.coeffs
        j = other.offset - lo
        if sign == 1:
            out[j:j + len(other.coeffs)] += other.coeffs
        else:
            out[j:j + len(other.coeffs)] -= other.coeffs
        return QPoly(out, lo)

    def __add__(self, other: "QPoly") -> "QPoly":
        return self._combine(other, 1)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self._combine(other, -1)

    def __mul__(self, other: "QPoly") -> "QPoly":
        if not self or not other:
            return QPoly()
        return QPoly(convolve(self.coeffs, other.coeffs), self.offset + other.offset, trusted=True)

    def mul_atom(self, sign: int, e: int) -> "QPoly":
        """Multiply by (1 - sign * q**e)."""
        if not self:
            return self
        if e == 0:
            return self.scale(1 - sign)
        c = self.coeffs
        n, k = len(c), abs(e)
        out = _zeros(n + k)
        # both end coefficients stay nonzero, so the result is already trimmed
        lo, hi = (slice(0, n), slice(k, None)) if e > 0 else (slice(k, None), slice(0, n))
        out[lo] = c
        if sign == 1:
            out[hi] -= c
        else:
            out[hi] += c
        return QPoly(out, self.offset if e > 0 else self.offset - k, trusted=True)

    def add_into(self, buf: np.ndarray, base: int, sign: int = 1) -> None:
        """buf[offset - base + i] += sign * coeffs[i], in place (accumulator helper)."""
        if not self:
            return
        start = self.offset - base
        view = buf[start:start + len(self.coeffs)]
        if sign == 1:
            view += self.coeffs
        else:
            view -= self.coeffs

    def div_atom(self, sign: int, e: int) -> "QPoly":
        """Exact quotient by (1 - sign * q**e); raises NonDivisible otherwise."""
        if not self:
            return self
        if e == 0:
            if sign == 1:
                raise NonDivisible("division by the vanishing factor (1 - 1)")
            if any(x % 2 for x in self.coeffs):
                raise NonDivisible("coefficients not divisible by 2")
            return QPoly(self.coeffs // 2, self.offset, trusted=True)
        if e < 0:
            # 1 - s q^e = -s q^e (1 - s q^-e)
            r = self.div_atom(sign, -e)
            return QPoly(-sign * r.coeffs, r.offset - e, trusted=True)
        c = self.coeffs
        n = len(c)
        m = n - e
        if m <= 0:
            raise NonDivisible(f"(1 - {sign}*q^{e}) does not divide a polynomial of length {n}")
        rows = -(-m // e)
        buf = _zeros(rows * e)
        buf[:m] = c[:m]
        buf = buf.reshape(rows, e)
        if sign == 1:
            r = np.cumsum(buf, axis=0)
        else:
            alt = as_object_array([1 if t % 2 == 0 else -1 for t in range(rows)])[:, None]
            r = np.cumsum(buf * alt, axis=0) * alt
        r = r.reshape(-1)[:m]
        # top e coefficients of the dividend must equal -sign * r[i - e]
        if m >= e:
            prev = r[m - e:m]
        else:
            prev = np.concatenate([_zeros(e - m), r])
        if np.any(c[m:] + sign * prev != 0):
            raise NonDivisible(f"(1 - {sign}*q^{e}) leaves a nonzero remainder")
        return QPoly(r, self.offset, trusted=True)

    def stretch(self, d: int) -> "QPoly":
        """Substitute q -> q**d (d >= 1)."""
        if d == 1 or not self:
            return self
        out = _zeros((len(self.coeffs) - 1) * d + 1)
        out[::d] = self.coeffs
        return QPoly(out, self.offset * d, trusted=True)

    def truncate(self, degree: int) -> "QPoly":
        if not self or self.top <= degree:
            return self
        keep = degree - self.offset + 1
        if keep <= 0:
            return QPoly()
        return QPoly(self.coeffs[:keep], self.offset)


ZERO_Q = QPoly()
ONE_Q = QPoly.monomial(0)

_NO_OTHERS = (0, 0, 0, 0)


def _addkey(k1, k2):
    return (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3])


class QSliced:
    """Multivariate Laurent polynomial: {(z, a, b, c) exponents: QPoly in q}."""

    __slots__ = ("slices",)

    def __init__(self, slices=None):
        self.slices = {k: v for k, v in (slices or {}).items() if v}

    @classmethod
    def from_qpoly(cls, p: QPoly, key=_NO_OTHERS) -> "QSliced":
        return cls({key: p})

    @classmethod
    def monomial(cls, mono, coeff: int = 1) -> "QSliced":
        return cls({tuple(mono[1:]): QPoly.monomial(mono[0], coeff)})

    @classmethod
    def from_terms(cls, terms) -> "QSliced":
        groups = defaultdict(list)
        for e, c in terms:
            groups[tuple(e[1:])].append((e[0], c))
        return cls({k: QPoly.from_items(v) for k, v in groups.items()})

    def terms(self):
        for k, p in self.slices.items():
            for e, c in p.items():
                yield (e,) + k, c

    def __bool__(self) -> bool:
        return bool(self.slices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSliced):
            return NotImplemented
        return self.slices.keys() == other.slices.keys() and all(
            self.slices[k] == other.slices[k] for k in self.slices)

    __hash__ = None

    def _combine(self, other: "QSliced", sign: int) -> "QSliced":
        out = dict(self.slices)
        for k, p in other.slices.items():
            cur = out.get(k)
            if cur is None:
                out[k] = p if sign == 1 else -p
            else:
                out[k] = cur + p if sign == 1 else cur - p
        return QSliced(out)

    def __add__(self, other: "QSliced") -> "QSliced":
        return self._combine(other, 1)

    def __sub__(self, other: "QSliced") -> "QSliced":
        return self._combine(other, -1)

    def __neg__(self) -> "QSliced":
        return QSliced({k: -p for k, p in self.slices.items()})

    def scale(self, k: int) -> "QSliced":
        if k == 1:
            return self
        return QSliced({key: p.scale(k) for key, p in self.slices.items()})

    def shift(self, mono) -> "QSliced":
        other = tuple(mono[1:])
        return QSliced({_addkey(k, other): p.shift(mono[0]) for k, p in self.slices.items()})

    def __mul__(self, other: "QSliced") -> "QSliced":
        acc: dict = {}
        for k1, p1 in self.slices.items():
            for k2, p2 in other.slices.items():
                k = _addkey(k1, k2)
                prod = p1 * p2
                cur = acc.get(k)
                acc[k] = prod if cur is None else cur + prod
        return QSliced(acc)

    def mul_qpoly(self, p: QPoly) -> "QSliced":
        return QSliced({k: s * p for k, s in self.slices.items()})

    def mul_atom(self, sign: int, mono) -> "QSliced":
        """Multiply by (1 - sign * mono)."""
        if not any(mono[1:]):
            return QSliced({k: p.mul_atom(sign, mono[0]) for k, p in self.slices.items()})
        return self - self.shift(mono).scale(sign)

    def div_atom(self, sign: int, mono) -> "QSliced":
        """Exact quotient by (1 - sign * mono); raises NonDivisible otherwise."""
        e, v = mono[0], tuple(mono[1:])
        if not any(v):
            return QSliced({k: p.div_atom(sign, e) for k, p in self.slices.items()})
        # Walk each line key0 + t*v: r_t = p_t + sign * q^e * r_{t-1}.
        axis = next(i for i, x in enumerate(v) if x)
        lines: dict = defaultdict(dict)
        for k, p in self.slices.items():
            t = k[axis] // v[axis]
            base = tuple(k[i] - t * v[i] for i in range(4))
            lines[base][t] = p
        out = {}
        for base, pts in lines.items():
            tmin, tmax = min(pts), max(pts)
            prev = ZERO_Q
            for t in range(tmin, tmax):
                cur = pts.get(t, ZERO_Q)
                if prev:
                    step = prev.shift(e)
                    cur = cur + step if sign == 1 else cur - step
                if cur:
                    out[tuple(base[i] + t * v[i] for i in range(4))] = cur
                prev = cur
            step = prev.shift(e)
            rest = pts[tmax] + step if sign == 1 else pts[tmax] - step
            if rest:
                raise NonDivisible(f"(1 - {sign}*{mono}) leaves a nonzero remainder")
        return QSliced(out)

    def truncate_q(self, degree: int) -> "QSliced":
        return QSliced({k: p.truncate(degree) for k, p in self.slices.items()})


class KroneckerBox:
    """Accumulate signed sums of q-polynomials as integers at q = 2**B.

    ``bound`` must dominate every coefficient magnitude of every partial sum
    that will be unpacked; all exponents must be nonnegative.
    """

    def __init__(self, bound: int):
        self.nb = _nbytes_for(max(bound, 1))
        self.bits = 8 * self.nb
        self._cache: dict = {}

    def pack(self, p: QPoly, key=None) -> int:
        if key is not None:
            hit = self._cache.get(key)
            if hit is not None:
                return hit
        if p.offset < 0:
            raise ValueError("KroneckerBox needs nonnegative exponents")
        value = pack(p.coeffs, self.nb) << (self.bits * p.offset) if p else 0
        if key is not None:
            self._cache[key] = value
        return value

    def qshift(self, value: int, e: int) -> int:
        return value << (self.bits * e)

    def unpack(self, value: int) -> QPoly:
        return QPoly(unpack(value, self.nb))
