"""Small builders shared by the catalog modules."""
from __future__ import annotations

from ..dense import QPoly, QSliced
from ..laurent import Poly, mono
from ..qkit import PochhammerFactorSet as FS
from ..qkit import sm


def poch(n: int, base_exp: int = 1, sign: int = 1, **exps: int) -> FS:
    """Factored (sign * monomial; q^base_exp)_n."""
    return FS.poch(sm(sign, **exps), n, base_exp)


def qq(n: int, start: int = 1, base_exp: int = 1) -> FS:
    """(q^start; q^base_exp)_n; default is (q;q)_n."""
    return FS.poch(sm(1, q=start), n, base_exp)


def unit(sign: int = 1, **exps: int) -> FS:
    return FS.monomial(mono(**exps), sign)


def atom(sign: int = 1, **exps: int) -> FS:
    """The single factor (1 - sign * monomial)."""
    return FS.poch(sm(sign, **exps), 1)


def z_graded(buckets: dict) -> QSliced:
    """{z exponent: QPoly} -> QSliced."""
    return QSliced({(e, 0, 0, 0): p for e, p in buckets.items() if p})


def from_q(p: QPoly) -> Poly:
    return Poly.from_sliced(QSliced.from_qpoly(p))
