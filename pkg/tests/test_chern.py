from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagchern.chern import (bernoulli, chern_classes_nf, chern_number,
                             chern_number_nf, chern_numbers, format_cmonomial,
                             monomials_of_weighted_degree, parse_cmonomial,
                             todd_genus, todd_polynomial, weighted_degree)
from flagchern.flagmodel import InvariantACS, enumerate_acs, is_integrable, \
    parse_manifold
from flagchern.polyring import Polynomial
from flagchern.rootsys import build_root_system
from flagchern.flagmodel import make_flag


def projective_space(n):
    """CP^n as the A_n flag with all simple roots but the first kept."""
    rs = build_root_system("A", n)
    return make_flag(rs, rs.simples[1:])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projective_space_oracle(n):
    flag = projective_space(n)
    assert flag.complex_dim == n
    assert flag.euler_characteristic() == n + 1
    acs = InvariantACS((1,) * len(flag.summands()))
    c1n = tuple(n if k == 0 else 0 for k in range(n))
    assert chern_number(flag, acs, c1n) == (n + 1) ** n
    assert chern_number_nf(flag, acs, c1n) == (n + 1) ** n
    top = tuple(1 if k == n - 1 else 0 for k in range(n))
    assert chern_number(flag, acs, top) == n + 1


def test_bernoulli_values():
    assert [bernoulli(k) for k in range(7)] == [
        Fraction(1), Fraction(-1, 2), Fraction(1, 6), Fraction(0),
        Fraction(-1, 30), Fraction(0), Fraction(1, 42)]


def test_monomial_parsing_round_trip():
    for m in monomials_of_weighted_degree(6, 6):
        assert weighted_degree(m) == 6
        assert parse_cmonomial(format_cmonomial(m), 6) == m
    with pytest.raises(ValueError):
        parse_cmonomial("c7", 6)
    with pytest.raises(ValueError):
        parse_cmonomial("q3", 6)
    # a monomial of the wrong weighted degree parses but is rejected by the
    # integration front ends
    flag = parse_manifold("SO(5)/T")
    with pytest.raises(ValueError):
        chern_number_nf(flag, InvariantACS((1, 1, 1, 1)),
                        parse_cmonomial("c1^2", 4))


# printed-identity regression: the Todd polynomial in low degrees, cleared
# of denominators
TODD_IDENTITIES = {
    5: (1440, {"c1c4": -1, "c1^2c3": 1, "c1c2^2": 3, "c1^3c2": -1}),
    6: (60480, {"c6": 2, "c1c5": -2, "c2c4": -9, "c1^2c4": -5, "c3^2": -1,
                "c1c2c3": 11, "c1^3c3": 5, "c2^3": 10, "c1^2c2^2": 11,
                "c1^4c2": -12, "c1^6": 2}),
    8: (3628800, {"c8": -3, "c1^8": -3, "c1^6c2": 24, "c1^4c2^2": -50,
                  "c1^2c2^3": 8, "c2^4": 21, "c1^5c3": -14, "c1^3c2c3": 26,
                  "c1c2^2c3": 50, "c1^2c3^2": 3, "c2c3^2": -8, "c1^4c4": 14,
                  "c1^2c2c4": -19, "c2^2c4": -34, "c1c3c4": -13, "c4^2": 5,
                  "c1^3c5": -7, "c1c2c5": -16, "c3c5": 3, "c1^2c6": 7,
                  "c2c6": 13, "c1c7": 3}),
    9: (7257600, {"c1^7c2": -3, "c1^5c2^2": 21, "c1^3c2^3": -42,
                  "c1^3c2c4": 26, "c1^6c3": 3, "c1^2c3c4": -13,
                  "c1^5c4": -3, "c1c2^4": 21, "c1c2^2c4": -34, "c1c4^2": 5,
                  "c1^4c5": 3, "c1^4c2c3": -29, "c1^2c2^2c3": 50,
                  "c1^3c3^2": 8, "c1c2c3^2": -8, "c1^2c2c5": -16,
                  "c1c3c5": 3, "c1^3c6": -3, "c1c2c6": 13, "c1^2c7": 3,
                  "c1c8": -3}),
}


@pytest.mark.parametrize("degree", sorted(TODD_IDENTITIES))
def test_todd_identities_regenerated(degree):
    denominator, integer_coeffs = TODD_IDENTITIES[degree]
    td = todd_polynomial(degree)
    assert td.common_denominator() == denominator
    expected = {parse_cmonomial(k, degree): Fraction(v, denominator)
                for k, v in integer_coeffs.items()}
    assert dict(td.coefficients) == expected


@pytest.mark.parametrize("name", [
    "F(6;1,2,3)", "F(5;1,2,2)", "F(4)", "FD(3;1,2)", "SO(5)/T", "Sp(2)/T",
    "G2-long", "G2-short", "SO(8)/U(4)",
])
def test_todd_genus_one_for_integrable_structures(name):
    flag = parse_manifold(name)
    for acs in enumerate_acs(flag):
        if is_integrable(flag, acs):
            assert todd_genus(flag, acs) == 1


def test_todd_genus_need_not_be_one_when_non_integrable():
    flag = parse_manifold("G2-long")
    genera = {acs.signs: todd_genus(flag, acs)
              for acs in enumerate_acs(flag)}
    assert genera[(1, 1, 1)] == 1
    assert any(g != 1 for g in genera.values())


def test_printed_chern_classes_rank2_full_flags():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    so5 = parse_manifold("SO(5)/T")
    acs = InvariantACS((1, 1, 1, 1))
    assert chern_classes_nf(so5, acs) == [
        3 * x + y,
        3 * x * y - 4 * y ** 2,
        -2 * x * y ** 2 - 4 * y ** 3,
        -2 * x * y ** 3,
    ]
    sp2 = parse_manifold("Sp(2)/T")
    assert chern_classes_nf(sp2, acs) == [
        4 * x + 2 * y,
        8 * x * y - 6 * y ** 2,
        -4 * x * y ** 2 - 12 * y ** 3,
        -8 * x * y ** 3,
    ]


@given(st.sampled_from(["F(5;1,2,2)", "FD(3;1,2)", "G2-long"]), st.data())
@settings(max_examples=25, deadline=None)
def test_conjugation_parity(name, data):
    flag = parse_manifold(name)
    s = len(flag.summands())
    n = flag.complex_dim
    signs = tuple(data.draw(st.sampled_from([1, -1])) for _ in range(s))
    acs = InvariantACS(signs)
    mono = data.draw(st.sampled_from(monomials_of_weighted_degree(n, n)))
    a = chern_number(flag, acs, mono)
    b = chern_number(flag, acs.conjugate(), mono)
    assert b == (-1) ** n * a


@pytest.mark.parametrize("name,signs", [
    ("F(5;1,2,2)", (1, -1, 1)),
    ("FD(3;1,2)", (1, 1, -1)),
    ("G2-short", (1, -1)),
    ("G2/T", (1, 1, -1, 1, 1, -1)),
])
def test_dual_oracles_agree(name, signs):
    flag = parse_manifold(name)
    acs = InvariantACS(signs)
    n = flag.complex_dim
    for mono in monomials_of_weighted_degree(n, n):
        assert chern_number(flag, acs, mono) \
            == chern_number_nf(flag, acs, mono)


def test_all_plus_top_class_is_euler_characteristic():
    for name in ("F(4)", "F(5;1,2,2)", "FD(3;1,2)", "G2/T", "SO(7)/U(3)"):
        flag = parse_manifold(name)
        n = flag.complex_dim
        acs = InvariantACS((1,) * len(flag.summands()))
        top = tuple(1 if k == n - 1 else 0 for k in range(n))
        assert chern_number(flag, acs, top) == flag.euler_characteristic()


def test_chern_numbers_independent_of_worker_count():
    flag = parse_manifold("F(5;1,2,2)")
    acs = InvariantACS((1, -1, 1))
    n = flag.complex_dim
    monos = monomials_of_weighted_degree(n, n)[:6]
    assert chern_numbers(flag, acs, monos, jobs=1) \
        == chern_numbers(flag, acs, monos, jobs=3)
