from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagchern.rootsys import (build_root_system, count_negated_positives,
                               reflection_matrix, weyl_group)

ORDERS = {
    ("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("A", 4): 120,
    ("B", 2): 8, ("B", 3): 48, ("C", 3): 48, ("D", 3): 24, ("D", 4): 192,
    ("G2", 2): 12,
}


@pytest.mark.parametrize("family,rank", sorted(ORDERS))
def test_weyl_group_order(family, rank):
    rs = build_root_system(family, rank)
    assert len(weyl_group(rs)) == ORDERS[(family, rank)]


@pytest.mark.parametrize("family,rank,n_pos", [
    ("A", 3, 6), ("A", 4, 10), ("B", 3, 9), ("C", 3, 9), ("D", 4, 12),
    ("G2", 2, 6),
])
def test_positive_root_count(family, rank, n_pos):
    rs = build_root_system(family, rank)
    assert len(rs.positives) == n_pos
    assert rs.n_positive == n_pos


@pytest.mark.parametrize("family,rank", sorted(ORDERS))
def test_simples_are_positive_and_heights_integral(family, rank):
    rs = build_root_system(family, rank)
    pos = set(rs.positives)
    assert set(rs.simples) <= pos
    for root in rs.positives:
        h = rs.height(root)
        assert h == int(h) and h >= 1
        coeffs = rs.simple_coefficients(root)
        assert all(c >= 0 for c in coeffs)
        assert sum(coeffs) == h


@pytest.mark.parametrize("family,rank", sorted(ORDERS))
def test_weyl_preserves_root_set(family, rank):
    rs = build_root_system(family, rank)
    roots = set(rs.positives) | {tuple(-x for x in r) for r in rs.positives}
    for w in weyl_group(rs):
        assert {w.apply(r) for r in roots} == roots


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("D", 4),
                                         ("G2", 2)])
def test_sign_is_negated_positive_parity(family, rank):
    rs = build_root_system(family, rank)
    for w in weyl_group(rs):
        assert w.sign == (-1) ** count_negated_positives(rs, w)


def test_reflection_is_involutive_isometry():
    rs = build_root_system("B", 3)
    for alpha in rs.simples:
        m = reflection_matrix(alpha)
        n = len(m)
        sq = [[sum(m[i][k] * m[k][j] for k in range(n)) for j in range(n)]
              for i in range(n)]
        assert all(sq[i][j] == (1 if i == j else 0)
                   for i in range(n) for j in range(n))


@given(st.sampled_from(["A", "B", "C", "D", "G2"]),
       st.integers(min_value=2, max_value=3))
@settings(max_examples=20, deadline=None)
def test_root_system_json_round_trip(family, rank):
    if family == "G2":
        rank = 2
    elif family == "D":
        rank = 3
    rs = build_root_system(family, rank)
    data = rs.to_json()
    assert data["family"] == rs.family and data["rank"] == rs.rank
    assert len(data["positives"]) == rs.n_positive


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        build_root_system("E", 8)


def test_a_family_order_formula():
    for n in range(1, 5):
        rs = build_root_system("A", n)
        assert len(weyl_group(rs)) == factorial(n + 1)
