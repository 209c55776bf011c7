from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from conftest import el, els, sweep
from gammasemi.constructors import fixture
from gammasemi.core import (
    InvalidTable,
    derived_semigroup,
    escaping_product,
    find_violations,
    find_zero,
    idempotent_pairs,
    is_associative,
    is_sub_gamma_semigroup,
    restrict,
    set_product,
    validate,
)
from oracles import mixed_associative, plain_associative, zeros

# aγa=b, aγb=b, bγa=a, bγb=b: (aγa)γa = a but aγ(aγa) = b.
# Chosen by scanning all 16 operations on two points with the oracle.
NON_ASSOC = [[[1, 1], [0, 1]]]


def test_t1_valid():
    M = validate(1, 1, [[[0]]])
    assert M.m == 1 and M.zero == 0


def test_lz2_valid_and_oracle_agrees():
    t = [[[0, 0], [1, 1]]]
    assert mixed_associative(t, 2, 1)
    assert find_violations(2, 1, t) == []
    validate(2, 1, t)


def test_z2_table_is_associative():
    # aγa=b, aγb=a, bγa=a, bγb=b is the cyclic group of order two.
    t = [[[1, 0], [0, 1]]]
    assert mixed_associative(t, 2, 1)
    assert find_violations(2, 1, t) == []


def test_associativity_violation_reported():
    assert not mixed_associative(NON_ASSOC, 2, 1)
    vs = find_violations(2, 1, NON_ASSOC)
    assert vs and vs[0].kind == "associativity"
    assert vs[0].indices == (0, 0, 0, 0, 0)
    with pytest.raises(InvalidTable) as exc:
        validate(2, 1, NON_ASSOC)
    assert exc.value.violations == vs


def test_shape_and_range_errors():
    assert find_violations(2, 1, [[[0, 0]]])[0].kind != "associativity"
    assert find_violations(2, 1, [[[0, 2], [0, 0]]])
    with pytest.raises(InvalidTable):
        validate(2, 1, [[[0, 5], [0, 0]]])


def test_find_zero_examples():
    assert fixture("N2").name(find_zero(fixture("N2"))) == "0"
    assert find_zero(fixture("LZ2")) is None
    assert fixture("T1").name(find_zero(fixture("T1"))) == "a"


def test_find_zero_matches_oracle():
    for M in sweep():
        z = zeros(M.table, M.m, M.g)
        assert find_zero(M) == (z[0] if z else None)


def test_set_product_examples():
    N2, LZ2 = fixture("N2"), fixture("LZ2")
    assert set_product(N2, els(N2, "a"), None, els(N2, "a")) == els(N2, "0")
    assert set_product(LZ2, els(LZ2, "a", "b"), None, els(LZ2, "a")) == els(LZ2, "a", "b")
    for M in (N2, LZ2, fixture("B5")):
        assert set_product(M, (), None, M.elements) == frozenset()


def test_derived_semigroup_examples():
    gz = fixture("GZ3")
    # 0, e, a with e the identity and aa = e
    assert derived_semigroup(gz, 0) == ((0, 0, 0), (0, 1, 2), (0, 2, 1))
    assert derived_semigroup(fixture("T1"), 0) == ((0,),)
    B = fixture("B5")
    assert derived_semigroup(B, 0) == tuple(tuple(r) for r in B.table[0])
    with pytest.raises(IndexError):
        derived_semigroup(B, 1)


def test_derived_semigroups_are_associative():
    for M in sweep():
        for c in M.gammas:
            op = derived_semigroup(M, c)
            assert plain_associative(op) and is_associative(op)


def test_sub_gamma_semigroup_examples():
    LZ2, B = fixture("LZ2"), fixture("B5")
    assert is_sub_gamma_semigroup(LZ2, els(LZ2, "a"))
    assert not is_sub_gamma_semigroup(B, els(B, "a"))
    assert escaping_product(B, els(B, "a")) is not None
    for M in (LZ2, B, fixture("T1")):
        assert is_sub_gamma_semigroup(M, M.elements)


def test_idempotent_pairs_examples():
    B = fixture("B5")
    assert [(B.name(e), c) for e, c in idempotent_pairs(B)] == [("0", 0), ("e", 0), ("f", 0)]
    N2 = fixture("N2")
    assert [(N2.name(e), c) for e, c in idempotent_pairs(N2)] == [("0", 0)]
    assert idempotent_pairs(fixture("T1")) == [(0, 0)]


def test_restrict_keeps_names():
    B = fixture("B5")
    sub = restrict(B, els(B, "0", "e"))
    assert sub.element_names == ("0", "e") and sub.zero == 0


def test_evaluate_left_to_right():
    B = fixture("B5")
    a, b = el(B, "a"), el(B, "b")
    assert B.evaluate((a, 0, b, 0, a)) == a


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_set_product_associative_and_monotone(data):
    M = data.draw(st.sampled_from(sweep()))
    subsets = st.frozensets(st.sampled_from(M.elements))
    A, B, C = data.draw(subsets), data.draw(subsets), data.draw(subsets)
    left = set_product(M, set_product(M, A, None, B), None, C)
    right = set_product(M, A, None, set_product(M, B, None, C))
    assert left == right
    extra = data.draw(subsets)
    assert set_product(M, A, None, B) <= set_product(M, A | extra, None, B)
    assert set_product(M, A, None, B) <= set_product(M, A, None, B | extra)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sweep()))
def test_zero_is_a_singleton_two_sided_ideal(M):
    singleton_ideals = [
        z for z in M.elements
        if set_product(M, M.elements, None, {z}) <= {z} and set_product(M, {z}, None, M.elements) <= {z}
    ]
    assert (find_zero(M) is not None) == bool(singleton_ideals)
    if singleton_ideals:
        assert singleton_ideals == [find_zero(M)]


def test_validate_flat_and_nested_agree():
    for M in sweep()[:40]:
        assert validate(M.m, M.g, M.flat()) == validate(M.m, M.g, M.table)


def test_every_two_by_two_table_classified():
    for flat in product(range(2), repeat=4):
        t = [[list(flat[:2]), list(flat[2:])]]
        assert (find_violations(2, 1, t) == []) == mixed_associative(t, 2, 1)
