from itertools import combinations

import pytest

from conftest import el
from gammasemi.constructors import (
    FIXTURE_IDS,
    PlainSemigroup,
    adjoin_zero,
    all_fixtures,
    cyclic_group,
    fixture,
    from_commutative_regular_semigroup,
    group_with_zero,
    maximal_subgroup,
    small_groups,
)
from gammasemi.core import find_violations, find_zero
from gammasemi.regularity import is_strongly_regular
from oracles import mixed_associative, strongly_regular


def test_gz3_from_z2():
    M = group_with_zero(cyclic_group(2), [0])
    assert M.table == fixture("GZ3").table
    assert M.element_names == ("0", "e", "a") and M.gamma_names == ("e",)
    assert is_strongly_regular(M)


def test_z1_with_zero():
    M = group_with_zero(cyclic_group(1), [0])
    assert M.m == 2 and M.zero == 0
    assert is_strongly_regular(M)


def test_z3_full_gamma():
    M = group_with_zero(cyclic_group(3), [0, 1, 2])
    assert (M.m, M.g) == (4, 3)
    assert strongly_regular(M.table, M.m, M.g)
    assert is_strongly_regular(M)


def test_group_with_zero_rejects_bad_input():
    with pytest.raises(ValueError):
        group_with_zero(cyclic_group(2), [])
    with pytest.raises(ValueError):
        group_with_zero(cyclic_group(2), [5])
    semilattice = PlainSemigroup(2, [[0, 0], [0, 1]])
    with pytest.raises(ValueError):
        group_with_zero(semilattice, [1])


def test_small_groups_are_groups():
    orders = [G.n for G in small_groups()]
    assert orders == [1, 2, 3, 4, 4, 5, 6, 6]
    assert all(G.is_group() for G in small_groups())
    assert sum(not G.is_commutative() for G in small_groups()) == 1


def test_from_semilattice_is_sl2():
    S = PlainSemigroup(2, [[0, 0], [0, 1]], ("0", "e"))
    M = from_commutative_regular_semigroup(S, 1)
    assert M.table == fixture("SL2").table and M.g == 1
    assert is_strongly_regular(M)


def test_from_z2_uses_whole_group():
    Z2 = cyclic_group(2)
    assert maximal_subgroup(Z2, 0) == [0, 1]
    M = from_commutative_regular_semigroup(Z2, 0)
    assert M.gamma_names == ("e", "a")
    assert is_strongly_regular(M) and strongly_regular(M.table, M.m, M.g)


def test_from_commutative_rejects_non_idempotent():
    with pytest.raises(ValueError):
        from_commutative_regular_semigroup(cyclic_group(2), 1)


def test_adjoin_zero_t1():
    M = adjoin_zero(fixture("T1"))
    assert M.m == 2 and find_zero(M) == 1
    assert M.table[0][0][0] == 0


def test_adjoin_zero_lz2():
    M = adjoin_zero(fixture("LZ2"))
    assert M.m == 3 and find_zero(M) == 2


def test_adjoin_zero_twice():
    once = adjoin_zero(fixture("LZ2"))
    twice = adjoin_zero(once)
    assert find_zero(twice) == 3
    old = el(twice, "0")
    assert twice.table[0][old][3] == 3 != old
    assert len(set(twice.element_names)) == 4


def test_fixtures():
    B = fixture("B5")
    assert B.m == 5 and B.name(find_zero(B)) == "0"
    assert fixture("T1").m == 1
    assert set(all_fixtures()) == set(FIXTURE_IDS)
    with pytest.raises(KeyError):
        fixture("nope")


def test_constructor_outputs_validate():
    outs = list(all_fixtures().values())
    for G in small_groups(4):
        for k in range(1, G.n + 1):
            outs.extend(group_with_zero(G, c) for c in combinations(range(G.n), k))
    for M in outs:
        assert find_violations(M.m, M.g, M.table) == []
        assert mixed_associative(M.table, M.m, M.g)


def test_commutative_regular_strongly_regular_iff_identity():
    # a = u.g.a.g.a puts a in S*e for every a, so e must be an identity of S
    from gammasemi.core import derived_semigroup
    from gammasemi.enumeration import EnumSpec, Enumeration

    seen = 0
    for n in range(1, 4):
        for M in Enumeration(EnumSpec(n, 1)):
            S = PlainSemigroup(n, derived_semigroup(M, 0))
            if not (S.is_commutative() and S.is_regular()):
                continue
            for e in range(n):
                if S.mul(e, e) == e:
                    seen += 1
                    assert is_strongly_regular(from_commutative_regular_semigroup(S, e)) == (S.identity() == e)
    assert seen


def test_semilattice_without_identity_has_no_good_idempotent():
    # {0, e, f} with ef = 0
    S = PlainSemigroup(3, [[0, 0, 0], [0, 1, 0], [0, 0, 2]], ("0", "e", "f"))
    assert S.identity() is None
    assert not any(is_strongly_regular(from_commutative_regular_semigroup(S, e)) for e in range(3))
