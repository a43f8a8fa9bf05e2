from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagchern.polyring import (Polynomial, antisymmetrize,
                                elementary_symmetric_in,
                                elementary_symmetric_values, exact_divide,
                                ExactDivisionError)


def poly_strategy(nvars=3, max_deg=3, max_terms=5):
    exps = st.tuples(*([st.integers(0, max_deg)] * nvars))
    coeff = st.fractions(min_value=-10, max_value=10, max_denominator=6)
    return st.dictionaries(exps, coeff, max_size=max_terms).map(
        lambda d: Polynomial(nvars, d))


@given(poly_strategy(), poly_strategy(), poly_strategy())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial.zero(3)
    assert p * Polynomial.one(3) == p


@given(poly_strategy(), st.lists(st.fractions(min_value=-5, max_value=5,
                                              max_denominator=4),
                                 min_size=3, max_size=3))
@settings(max_examples=60, deadline=None)
def test_evaluate_is_ring_homomorphism(p, point):
    q = p * p + p
    assert q.evaluate(point) == p.evaluate(point) ** 2 + p.evaluate(point)


@given(poly_strategy())
@settings(max_examples=40, deadline=None)
def test_json_round_trip(p):
    assert Polynomial.from_json(p.nvars, p.to_json()) == p


def test_variable_and_linear_form():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    assert Polynomial.linear_form([2, -3]) == 2 * x - 3 * y
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y


def test_power_nonnegative_only():
    x = Polynomial.variable(1, 0)
    with pytest.raises(ValueError):
        x ** -1


def test_elementary_symmetric_matches_value_version():
    forms = [Polynomial.variable(3, i) for i in range(3)]
    pt = [Fraction(2), Fraction(3), Fraction(5)]
    vals = elementary_symmetric_values(pt, 3)
    for k in range(1, 4):
        assert elementary_symmetric_in(forms, k).evaluate(pt) == vals[k]
    assert vals[1] == 10 and vals[2] == 31 and vals[3] == 30


def test_exact_divide_and_remainder_error():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    p = (x + y) * (x - y)
    assert exact_divide(p, x + y) == x - y
    with pytest.raises(ExactDivisionError):
        exact_divide(x * x + y, x)


def test_antisymmetrize_kills_symmetric_polynomials():
    from flagchern.rootsys import build_root_system, weyl_group
    rs = build_root_system("A", 2)
    w = weyl_group(rs)
    x = Polynomial.variable(3, 0)
    y = Polynomial.variable(3, 1)
    z = Polynomial.variable(3, 2)
    assert antisymmetrize(x + y + z, w).is_zero()
    # the Weyl denominator is antisymmetric: antisymmetrization scales by |W|
    den = (x - y) * (x - z) * (y - z)
    assert antisymmetrize(den, w) == den * len(w)
