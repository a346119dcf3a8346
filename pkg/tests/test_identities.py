from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from qid.errors import DomainError, ResidualDenominator
from qid.identities import (catalog, catalog_metadata, evaluate_alternate, evaluate_side,
                            get_entry, reduce_check, verify_instance)
from qid.identities.cubic import cubic_a0_lhs, id3_lhs, id4_lhs
from qid.identities.hyper import z1_lhs, z1_rhs, z1_spec
from qid.identities.jtp import id1_lhs_cleared
from qid.identities.lebesgue import id2_lhs, id2b_lhs_single, id2b_phi
from qid.laurent import ONE, Poly, RationalPoint, eval_rational, exact_div, mono, parse
from qid.qkit import FactorSet, phi_sum_cleared


# independent evaluation straight from the displayed sums -----------------
def gauss(n: int, k: int, q: Fraction) -> Fraction:
    if k < 0 or k > n or n < 0:
        return Fraction(0)
    num = den = Fraction(1)
    for t in range(1, k + 1):
        num *= 1 - q ** (n - k + t)
        den *= 1 - q ** t
    return num / den


def T(n: int) -> int:
    return n * (n + 1) // 2


def id1_oracle(L, q, z):
    lhs = sum((z ** -n + z ** (n + 1)) / (1 + z) * q ** T(n) for n in range(L + 1))
    rhs = sum((-1) ** k * z ** (i - j) * q ** (T(i) + T(j) + T(k))
              * gauss(L - i, j, q) * gauss(L - j, k, q) * gauss(L - k, i, q)
              for i in range(L + 1) for j in range(L + 1) for k in range(L + 1))
    return lhs, rhs


def id2_oracle(L, q, z):
    lhs = sum((-1) ** j * z ** (2 * j) * q ** (T(i) + T(j)) * gauss(L - j, i, q) * gauss(i, j, q)
              for j in range(L + 1) for i in range(L + 1))
    rhs = sum((-1) ** j * z ** (i + j) * q ** (T(i) + T(j) + T(k))
              * gauss(L - i, j, q) * gauss(L - j, k, q) * gauss(L - k, i, q)
              for i in range(L + 1) for j in range(L + 1) for k in range(L + 1))
    return lhs, rhs


def id3_oracle(L, q):
    return sum((-1) ** (j % 2) * q ** (j * (3 * j + 1) // 2) * gauss(2 * L - j, L + j, q)
               for j in range(-L, L + 1))


POINTS = [(Fraction(2, 3), Fraction(-5, 7)), (Fraction(-3), Fraction(4, 11))]


@pytest.mark.parametrize("L", range(6))
@pytest.mark.parametrize("q,z", POINTS)
def test_id1_id2_against_oracle(L, q, z):
    pt = RationalPoint(q=q, z=z)
    for entry_id, oracle in (("id1", id1_oracle), ("id2", id2_oracle)):
        lo, ro = oracle(L, q, z)
        assert lo == ro
        assert eval_rational(evaluate_side(entry_id, "lhs", {"L": L}), pt) == lo
        assert eval_rational(evaluate_side(entry_id, "rhs", {"L": L}), pt) == ro


@pytest.mark.parametrize("L", range(8))
def test_id3_against_oracle(L):
    q = Fraction(3, 5)
    assert id3_oracle(L, q) == 1
    assert eval_rational(evaluate_side("id3", "lhs", {"L": L}), RationalPoint(q=q)) == 1


# catalog shape -------------------------------------------------------------
def test_catalog_shape():
    entries = catalog()
    ids = [e.id for e in entries]
    assert len(ids) == 22 and len(set(ids)) == 22
    assert {"id1", "id2", "id3", "id4", "id1b", "id1c", "id1_var_a", "id1_var_b", "id2b"} <= set(ids)
    assert [p.name for p in get_entry("id3").params] == ["L"]
    meta = catalog_metadata()
    assert [m["id"] for m in meta] == ids and all(m["normalizer"] for m in meta)


def test_unknown_and_out_of_domain():
    with pytest.raises(DomainError):
        get_entry("id9")
    for params in ({"L": -1}, {}, {"L": 1, "x": 2}, {"L": 1.5}):
        with pytest.raises(DomainError):
            get_entry("id1").check_params(params)
    assert verify_instance("id1", {"L": -1}).status == "error"


# spot values ----------------------------------------------------------------
def test_spot_values():
    assert evaluate_side("id1", "lhs", {"L": 1}) == parse("1 + q*z^-1 - q + q*z")
    assert evaluate_side("id3", "lhs", {"L": 0}) == ONE
    assert evaluate_side("id3", "lhs", {"L": 2}) == ONE
    assert evaluate_side("id4", "lhs", {"L": 1}) == ONE
    for entry_id in ("id1", "id2"):
        r = verify_instance(entry_id, {"L": 0})
        assert r.equal and r.lhs == ONE and r.rhs == ONE
    # normalizer q^{n^2}: q * (1 - q^-1)
    r = verify_instance("lemma_ex26", {"n": 1})
    assert r.equal and r.lhs == parse("q - 1")


def test_reduce_check_examples():
    assert reduce_check("id1b", "id1", "c↦0", {"L": 3}).status == "equal"
    assert reduce_check("lemma_bN_c", "lemma_bN", "c->0", {"N": 4}).status == "equal"
    assert reduce_check("lemma_bN", "id1", "assembly", {"L": 2}).status == "equal"
    with pytest.raises(DomainError):
        reduce_check("id2", "id1", "c=0", {"L": 1})


# domain of lemma_z1 --------------------------------------------------------
def test_z1_rejects_m_above_n():
    assert verify_instance("lemma_z1", {"n": 0, "m": 1}).status == "error"
    # n=0 leaves the single term 1, but (a;q)_{n-m} = 1/(1 - a/q) is no polynomial
    assert z1_lhs(0, 1).poly == Poly.var("q")
    with pytest.raises(ValueError):
        z1_rhs(0, 1)


def test_wrong_normalizer_is_loud():
    with pytest.raises(ResidualDenominator):
        phi_sum_cleared(z1_spec(3, 1), FactorSet.monomial(mono(q=7)))


# alternate routes ----------------------------------------------------------
@pytest.mark.parametrize("L", range(26))
def test_id1_division_vs_expansion(L):
    assert evaluate_alternate("id1", "zexp", {"L": L}).poly == evaluate_side("id1", "lhs", {"L": L})


@pytest.mark.parametrize("L", [0, 1, 4, 9])
def test_id1_cleared_route(L):
    assert exact_div(id1_lhs_cleared(L), ONE + Poly.var("z")) == evaluate_side("id1", "lhs", {"L": L})


@pytest.mark.parametrize("L", range(26))
def test_id2b_single_sum_equals_id2_lhs(L):
    assert id2b_lhs_single(L).poly == id2_lhs(L).poly
    assert evaluate_alternate("id2b", "single_sum", {"L": L}).poly == evaluate_side("id2b", "lhs", {"L": L})


@pytest.mark.parametrize("L", range(0, 14, 3))
def test_id2b_sigma_split(L):
    assert evaluate_alternate("id2b", "sigma_split", {"L": L}).poly == evaluate_side("id2b", "lhs", {"L": L})
    for k in range(L // 2 + 1):
        _, cleared, closed = id2b_phi(L, k)
        assert cleared == closed


@pytest.mark.parametrize("L", range(41))
def test_pentagonal_sums_from_cubic(L):
    sign = (-1) ** L
    assert cubic_a0_lhs(3 * L).poly == id3_lhs(L).poly.shift(mono(), sign)
    assert cubic_a0_lhs(3 * L + 1).poly == id4_lhs(L).poly.shift(mono(), sign)


@pytest.mark.parametrize("n", [2, 5, 8, 29, 62, 119])
def test_cubic_vanishing(n):
    assert evaluate_side("cubic_a0", "lhs", {"n": n}).is_zero
    assert evaluate_side("cubic_ainf", "lhs", {"n": n}).is_zero


def test_c_variant_division_exact():
    # z^{2L-n+1} + (-1)^n q^{n(2L-n+1)} vanishes at z = -q^n
    L = 4
    for n in range(2 * L + 1):
        num = Poly({mono(z=2 * L - n + 1): 1, mono(q=n * (2 * L - n + 1)): (-1) ** n})
        exact_div(num, Poly({mono(q=n): 1, mono(z=1): 1}))


def test_concurrent_evaluation_safe():
    jobs = [("id1", {"L": L}) for L in range(8)] + [("id3", {"L": L}) for L in range(8)]
    with ThreadPoolExecutor(4) as pool:
        out = list(pool.map(lambda a: verify_instance(*a).status, jobs))
    assert out == ["equal"] * len(jobs)
