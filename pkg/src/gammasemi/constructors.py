"""Gamma-semigroups built from groups and semigroups, plus the fixture corpus."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

from .core import GammaSemigroup, is_associative, validate


@dataclass(frozen=True)
class PlainSemigroup:
    n: int
    table: tuple
    names: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(r) for r in self.table))
        if len(self.table) != self.n or any(len(r) != self.n for r in self.table):
            raise ValueError("table must be n x n")
        if not is_associative(self.table):
            raise ValueError("operation is not associative")
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"s{i}" for i in range(self.n)))

    def mul(self, a, b):
        return self.table[a][b]

    def identity(self):
        for e in range(self.n):
            if all(self.table[e][x] == x == self.table[x][e] for x in range(self.n)):
                return e
        return None

    def is_group(self) -> bool:
        e = self.identity()
        if e is None:
            return False
        return all(any(self.table[x][y] == e for y in range(self.n)) for x in range(self.n))

    def is_commutative(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in range(self.n) for b in range(self.n))

    def is_regular(self) -> bool:
        t = self.table
        return all(any(t[t[a][x]][a] == a for x in range(self.n)) for a in range(self.n))


def cyclic_group(n: int) -> PlainSemigroup:
    names = ["e", "a"] + [f"a{k}" for k in range(2, n)]
    return PlainSemigroup(n, [[(a + b) % n for b in range(n)] for a in range(n)], tuple(names[:n]))


def direct_product(G: PlainSemigroup, H: PlainSemigroup) -> PlainSemigroup:
    pairs = list(product(range(G.n), range(H.n)))
    idx = {p: i for i, p in enumerate(pairs)}
    t = [[idx[(G.mul(a, c), H.mul(b, d))] for (c, d) in pairs] for (a, b) in pairs]
    return PlainSemigroup(len(pairs), t)


def symmetric_group(k: int) -> PlainSemigroup:
    perms = sorted(permutations(range(k)))
    idx = {p: i for i, p in enumerate(perms)}
    # (p*q)(i) = p(q(i))
    t = [[idx[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
    return PlainSemigroup(len(perms), t)


def small_groups(max_order: int = 6) -> list:
    """One representative of every isomorphism class of groups of order <= 6."""
    if max_order > 6:
        raise ValueError("only orders up to 6 are tabulated")
    groups = {
        1: [cyclic_group(1)],
        2: [cyclic_group(2)],
        3: [cyclic_group(3)],
        4: [cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))],
        5: [cyclic_group(5)],
        6: [cyclic_group(6), symmetric_group(3)],
    }
    return [G for n in range(1, max_order + 1) for G in groups[n]]


def group_with_zero(group: PlainSemigroup, gamma: Sequence[int]) -> GammaSemigroup:
    """Adjoin a zero to a group and multiply by ``a gamma b = a*gamma*b``.

    The zero is element 0 and group element ``i`` becomes ``i + 1``; operators
    are the chosen group elements in increasing order.
    """
    if not group.is_group():
        raise ValueError("input is not a group")
    gamma = sorted(set(gamma))
    if not gamma:
        raise ValueError("operator set must be nonempty")
    if any(not 0 <= c < group.n for c in gamma):
        raise ValueError("operators must be group elements")
    m = group.n + 1
    mul = group.table
    t = [[[0] * m for _ in range(m)] for _ in gamma]
    for k, c in enumerate(gamma):
        for a in range(group.n):
            for b in range(group.n):
                t[k][a + 1][b + 1] = mul[mul[a][c]][b] + 1
    names = ("0",) + tuple(group.names)
    return validate(m, len(gamma), t, names, [group.names[c] for c in gamma])


def maximal_subgroup(S: PlainSemigroup, e: int) -> list:
    """Group of units of ``eSe`` in a commutative semigroup."""
    t = S.table
    return [
        x for x in range(S.n)
        if t[x][e] == x and any(t[y][e] == y and t[x][y] == e for y in range(S.n))
    ]


def from_commutative_regular_semigroup(S: PlainSemigroup, e: int) -> GammaSemigroup:
    """Operators are the maximal subgroup at the idempotent ``e``, acting by
    ``a gamma b = (a*gamma)*b`` inside S.

    The result is strongly regular exactly when ``e`` is an identity of S:
    ``a = u gamma a gamma a`` puts every ``a`` in ``S*e``.
    """
    if not S.is_commutative():
        raise ValueError("semigroup is not commutative")
    if not S.is_regular():
        raise ValueError("semigroup is not regular")
    if not 0 <= e < S.n or S.mul(e, e) != e:
        raise ValueError(f"{e} is not an idempotent")
    gamma = maximal_subgroup(S, e)
    t = [[[S.mul(S.mul(a, c), b) for b in range(S.n)] for a in range(S.n)] for c in gamma]
    return validate(S.n, len(gamma), t, S.names, [S.names[c] for c in gamma])


def adjoin_zero(M: GammaSemigroup, name: str = None) -> GammaSemigroup:
    """Append a fresh absorbing element as index ``m``."""
    m = M.m + 1
    z = M.m
    t = [[[M.table[c][a][b] if a < z and b < z else z for b in range(m)] for a in range(m)] for c in M.gammas]
    if name is None:
        name = "0"
        while name in M.element_names:
            name += "'"
    return validate(m, M.g, t, M.element_names + (name,), M.gamma_names)


def _single(names, rule) -> GammaSemigroup:
    m = len(names)
    return validate(m, 1, [[[rule(a, b) for b in range(m)] for a in range(m)]], names, ["g0"])


def _b5():
    # 0, a, b, e, f: Brandt semigroup of 2x2 matrix units
    o, a, b, e, f = range(5)
    nonzero = {(a, b): e, (b, a): f, (e, a): a, (a, f): a, (f, b): b, (b, e): b, (e, e): e, (f, f): f}
    return _single(["0", "a", "b", "e", "f"], lambda x, y: nonzero.get((x, y), o))


FIXTURE_IDS = ("T1", "N2", "LZ2", "RZ2", "SL2", "GZ3", "B5")


def fixture(fid: str) -> GammaSemigroup:
    if fid == "T1":
        return _single(["a"], lambda x, y: 0)
    if fid == "N2":
        return _single(["0", "a"], lambda x, y: 0)
    if fid == "LZ2":
        return _single(["a", "b"], lambda x, y: x)
    if fid == "RZ2":
        return _single(["a", "b"], lambda x, y: y)
    if fid == "SL2":
        return _single(["0", "e"], lambda x, y: 1 if x == y == 1 else 0)
    if fid == "GZ3":
        # 0, e, a with e, a forming Z2; Gamma = [e]
        z2 = {(1, 1): 1, (1, 2): 2, (2, 1): 2, (2, 2): 1}
        M = _single(["0", "e", "a"], lambda x, y: z2.get((x, y), 0))
        return validate(3, 1, M.table, M.element_names, ["e"])
    if fid == "B5":
        return _b5()
    raise KeyError(f"unknown fixture {fid!r}")


def all_fixtures() -> dict:
    return {fid: fixture(fid) for fid in FIXTURE_IDS}
