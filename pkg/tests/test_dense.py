import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qid.dense import KroneckerBox, QPoly, QSliced
from qid.errors import NonDivisible
from qid.laurent import Poly, mono

small = st.lists(st.integers(-20, 20), max_size=8)
offsets = st.integers(-5, 5)
qpolys = st.builds(QPoly, small, offsets)


def naive_mul(a: QPoly, b: QPoly) -> QPoly:
    acc = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
    return QPoly.from_items(acc.items())


def test_canonical_trim():
    p = QPoly([0, 0, 3, 0, 1, 0], 2)
    assert p.offset == 4 and list(p.coeffs) == [3, 0, 1]
    assert not QPoly([0, 0])
    assert QPoly([1, 2], 0) != QPoly([1, 2], 1)


@settings(max_examples=300, deadline=None)
@given(qpolys, qpolys)
def test_mul_matches_naive(a, b):
    assert a * b == naive_mul(a, b)


@settings(max_examples=300, deadline=None)
@given(qpolys, st.sampled_from([1, -1]), st.integers(-6, 6).filter(bool))
def test_atom_round_trip(p, sign, e):
    assert p.mul_atom(sign, e).div_atom(sign, e) == p
    atom = QPoly.from_items([(0, 1), (e, -sign)])
    assert p.mul_atom(sign, e) == naive_mul(p, atom)


def test_div_atom_nondivisible():
    with pytest.raises(NonDivisible):
        QPoly([1, 1]).div_atom(1, 1)


def test_big_coefficients():
    p = QPoly([10 ** 40, -(10 ** 39)])
    assert (p * p).coefficient(1) == -2 * 10 ** 79


def test_add_into():
    buf = np.zeros(6, dtype=object)
    QPoly([1, 2], 2).add_into(buf, 0)
    QPoly([5], 3).add_into(buf, 0, -1)
    assert list(buf) == [0, 0, 1, -3, 0, 0]


def test_sliced_mul_matches_laurent():
    a = Poly({mono(q=1, z=-1): 2, mono(a=1): -1, mono(): 3})
    b = Poly({mono(q=-2, z=1, c=1): 1, mono(q=4): 5})
    assert Poly.from_sliced(a.to_sliced() * b.to_sliced()) == a * b


def test_sliced_atoms():
    s = Poly({mono(q=2, b=1): 1, mono(): -4}).to_sliced()
    m = mono(q=1, a=1)
    assert s.mul_atom(-1, m).div_atom(-1, m) == s
    assert QSliced() == QSliced.from_terms([])


def test_kronecker_box_round_trip():
    box = KroneckerBox(10 ** 6)
    p, r = QPoly([3, -7, 0, 11]), QPoly([999, 1], 5)
    v = box.pack(p) - box.qshift(box.pack(r), 2)
    assert box.unpack(v) == p - r.shift(2)
