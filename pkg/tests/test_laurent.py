import pytest
from hypothesis import given, strategies as st

from mixedbraid.cyclotomic import CycNum, root_of_unity
from mixedbraid.laurent import LaurentPoly

M = 3
exps = st.tuples(*(st.integers(-3, 3) for _ in range(M)))
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(lambda d: LaurentPoly(M, d))


def t(j, p=1):
    return LaurentPoly.var(M, j, p)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(polys)
def test_no_zero_terms_stored(p):
    assert all(p.terms.values())
    assert all((p - p).terms.values()) and (p - p).is_zero()


@given(polys)
def test_text_round_trip(p):
    assert LaurentPoly.from_text(p.to_text(), M) == p


@given(polys, st.integers(1, M))
def test_divide_one_minus(p, j):
    q = p * (1 - t(j))
    assert q.divide_one_minus(j) == p


@given(polys, polys)
def test_evaluation_is_a_ring_map(a, b):
    vals = [root_of_unity(3, 1), root_of_unity(4, 1), CycNum.rational(2)]
    assert (a * b).evaluate(vals) == a.evaluate(vals) * b.evaluate(vals)
    assert (a + b).evaluate(vals) == a.evaluate(vals) + b.evaluate(vals)


def test_text_format():
    p = LaurentPoly.from_text("3*t1^2*t2^-1 - 1", 2)
    assert p.terms == {(2, -1): 3, (0, 0): -1}
    assert LaurentPoly.from_text(p.to_text(), 2) == p


def test_not_divisible():
    with pytest.raises(ArithmeticError):
        (t(1) + 1).divide_one_minus(1)


def test_unit_monomial_inverse():
    assert (2 * t(2, 3)) ** 1 == 2 * t(2, 3)
    assert (-t(1, 2)) ** -1 == -t(1, -2)
    with pytest.raises(ValueError):
        (t(1) + 1) ** -1


def test_specialize_and_at_one():
    p = t(1) * t(2) - t(3, 2) + 4
    assert p.specialize() == {0: 4}
    assert p.at_one() == 4
