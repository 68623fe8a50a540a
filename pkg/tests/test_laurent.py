import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphoid.laurent import A, A_INV, ONE, SIGMA, SIGMA_PRIME, ZERO, LaurentPoly, add, degrees, mul, parse

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


def test_add_examples():
    assert add(A + 1, A_INV) == SIGMA
    assert add(A + 1, ZERO) == A + 1
    assert add(A, -A) == ZERO
    assert ZERO.terms == {}


def test_mul_and_degrees():
    assert mul(A + 1, A - 1) == A ** 2 - 1
    assert (A_INV * A) == ONE
    assert degrees(SIGMA) == (-1, 1, 2)
    with pytest.raises(ValueError):
        ZERO.degrees()


def test_named_constants():
    assert SIGMA_PRIME == -SIGMA - 1
    assert str(SIGMA) == "A + 1 + A^-1"


@pytest.mark.parametrize("text", ["A^2 - 3 + A^-1", "-A - 1 - A^-1", "0", "7", "2*A^5 - A^-12", "A"])
def test_text_round_trip(text):
    assert str(parse(text)) == text


def test_canonical_order_descending():
    p = LaurentPoly({-1: 1, 0: -3, 2: 1})
    assert str(p) == "A^2 - 3 + A^-1"
    assert p.to_pairs() == [[2, 1], [0, -3], [-1, 1]]
    assert LaurentPoly.from_pairs(p.to_pairs()) == p


@pytest.mark.parametrize("bad", ["", "x", "A^", "2**A"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse(bad)


def test_unit_normalized():
    assert (-SIGMA.shift(5)).unit_normalized() == SIGMA.shift(1)
    assert SIGMA.divides_by_unit(-SIGMA.shift(3)) == -A_INV ** 3


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO


@given(polys)
def test_no_zero_coefficients_stored(p):
    assert all(c != 0 for c in p.terms.values())
    assert parse(str(p)) == p


@given(polys, st.integers(-4, 4))
def test_shift_and_mirror(p, k):
    assert p.shift(k) == p * LaurentPoly.monomial(k)
    assert p.mirror().mirror() == p


@given(polys, st.integers(0, 4))
def test_power_matches_repeated_product(p, n):
    expect = ONE
    for _ in range(n):
        expect = expect * p
    assert p ** n == expect
