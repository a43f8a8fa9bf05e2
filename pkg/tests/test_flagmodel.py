import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagchern.flagmodel import (InvariantACS, classify_acs, enumerate_acs,
                                 is_integrable, parse_manifold)

EULER = {
    "F(6;1,2,3)": 60, "F(7;1,2,4)": 105, "F(8;1,2,5)": 168,
    "F(8;1,3,4)": 280, "F(4)": 24, "F(5)": 120, "G2/T": 12,
    "SO(5)/T": 8, "FD(4;1,3)": 32, "Sp(3)/T": 48,
    "G2-long": 6, "G2-short": 6,
}


@pytest.mark.parametrize("name,chi", sorted(EULER.items()))
def test_euler_characteristics(name, chi):
    assert parse_manifold(name).euler_characteristic() == chi


@pytest.mark.parametrize("name,dims", [
    ("F(6;1,2,3)", (2, 3, 6)),     # block products 1*2, 1*3, 2*3
    ("F(7;1,2,4)", (2, 4, 8)),
    ("F(5;1,2,2)", (2, 2, 4)),
    ("FD(3;1,2)", (2, 2, 1)),
    ("G2-long", (2, 1, 2)),
    ("G2-short", (4, 1)),
    ("SO(7)/U(3)", (3, 3)),
    ("SO(8)/U(4)", (6,)),
])
def test_isotropy_summand_dimensions(name, dims):
    flag = parse_manifold(name)
    assert tuple(sorted(s.dim_complex for s in flag.summands())) \
        == tuple(sorted(dims))
    assert sum(s.dim_complex for s in flag.summands()) == flag.complex_dim


@pytest.mark.parametrize("name,count", [
    ("F(6;1,2,3)", 4), ("F(5;1,2,2)", 4), ("FD(3;1,2)", 4),  # s = 3
    ("F(4)", 32),                                            # s = 6
    ("F(5)", 512),                                           # s = 10
])
def test_census_up_to_conjugation(name, count):
    flag = parse_manifold(name)
    acs = enumerate_acs(flag)
    assert len(acs) == count
    assert len(enumerate_acs(flag, up_to_conjugation=False)) == 2 * count
    # conjugation-reduced list contains one of each +/- pair
    seen = set(a.signs for a in acs)
    for a in acs:
        assert a.conjugate().signs not in seen


@pytest.mark.parametrize("name,n_classes", [
    ("F(4)", 4), ("F(5)", 12), ("F(5;1,2,2)", 3),
    ("F(3;1,1,1)", 2), ("F(6;2,2,2)", 2),
])
def test_equivalence_class_counts(name, n_classes):
    assert len(classify_acs(parse_manifold(name))) == n_classes


@pytest.mark.parametrize("name", ["F(3;1,1,1)", "F(6;2,2,2)"])
def test_equal_block_flags_have_integrable_class_of_size_3(name):
    classes = classify_acs(parse_manifold(name))
    by_integrable = {c.integrable: c for c in classes}
    assert set(by_integrable) == {True, False}
    assert by_integrable[True].size == 3
    assert by_integrable[False].size == 1


def test_three_summand_integrability_pattern():
    # on F(n;a,b,c) the structures (+,+,+), (+,-,+)-like reorderings are
    # integrable while the cyclic-looking one is not: exactly 3 of the 4
    # conjugation classes are integrable
    for name in ("F(6;1,2,3)", "F(7;1,2,4)", "F(5;1,2,2)"):
        flag = parse_manifold(name)
        verdicts = [is_integrable(flag, a) for a in enumerate_acs(flag)]
        assert sorted(verdicts) == [False, True, True, True]
        assert is_integrable(flag, InvariantACS((1, 1, 1)))


def test_g2_partial_integrability():
    long_flag = parse_manifold("G2-long")
    verdicts = {a.signs: is_integrable(long_flag, a)
                for a in enumerate_acs(long_flag)}
    assert verdicts[(1, 1, 1)] is True
    assert sum(verdicts.values()) == 1  # only the all-plus one

    short_flag = parse_manifold("G2-short")
    verdicts = {a.signs: is_integrable(short_flag, a)
                for a in enumerate_acs(short_flag)}
    assert verdicts == {(1, 1): True, (1, -1): False}


def test_full_flag_all_plus_is_integrable():
    for name in ("F(4)", "F(5)", "G2/T", "SO(5)/T", "Sp(2)/T", "Sp(3)/T"):
        flag = parse_manifold(name)
        assert is_integrable(flag, InvariantACS((1,) * len(flag.summands())))


@given(st.sampled_from(["F(4)", "F(5;1,2,2)", "FD(3;1,2)", "G2/T"]),
       st.data())
@settings(max_examples=40, deadline=None)
def test_integrability_invariant_under_conjugation(name, data):
    flag = parse_manifold(name)
    s = len(flag.summands())
    signs = tuple(data.draw(st.sampled_from([1, -1])) for _ in range(s))
    acs = InvariantACS(signs)
    assert is_integrable(flag, acs) == is_integrable(flag, acs.conjugate())


def test_classes_partition_the_census():
    flag = parse_manifold("F(4)")
    classes = classify_acs(flag)
    members = [m.signs for c in classes for m in c.members]
    assert len(members) == len(set(members)) == 32
    for c in classes:
        for m in c.members:
            assert is_integrable(flag, m) == c.integrable


def test_parse_manifold_aliases_and_errors():
    assert parse_manifold("F(3;1,1,1)").euler_characteristic() == 6
    assert parse_manifold("SO(8)/U(4)").complex_dim == 6
    assert parse_manifold("SO(7)/U(3)").complex_dim == 6
    with pytest.raises(ValueError):
        parse_manifold("E8/T")
    with pytest.raises(ValueError):
        parse_manifold("F(5;1,2)")  # blocks must sum to n


def test_acs_sign_validation():
    with pytest.raises(ValueError):
        InvariantACS((1, 0, 1))
