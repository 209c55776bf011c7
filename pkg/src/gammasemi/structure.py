"""Simplicity, Gamma-groups, completely 0-simple pieces and decompositions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .core import ElementSet, GammaSemigroup, escaping_product, is_sub_gamma_semigroup, restrict, set_product
from .green import d_partition, h_partition, l_partition, r_partition
from .ideals import principal_two_sided_ideal
from .regularity import is_regular_element


@dataclass(frozen=True)
class Decomposition:
    components: tuple  # of ElementSet
    mode: str  # "disjoint" | "zero_disjoint"
    labels: tuple = field(default=())

    def is_valid(self, M: GammaSemigroup) -> bool:
        union = frozenset().union(*self.components) if self.components else frozenset()
        if self.mode == "disjoint":
            return union == M.carrier and sum(len(c) for c in self.components) == M.m
        z = frozenset({M.zero})
        if (union | z) != M.carrier:
            return False
        return all(a & b == z for a, b in combinations(self.components, 2))


def _closed(M: GammaSemigroup, T: Iterable[int]) -> ElementSet:
    T = frozenset(T)
    if not T or not is_sub_gamma_semigroup(M, T):
        raise ValueError(f"{sorted(T)} is not a sub-Gamma-semigroup")
    return T


def is_left_simple(M: GammaSemigroup, T: Iterable[int]) -> bool:
    """``T Gamma a == T`` for every ``a`` in the closed subset T."""
    T = _closed(M, T)
    return all(set_product(M, T, None, (a,)) == T for a in T)


def is_right_simple(M: GammaSemigroup, T: Iterable[int]) -> bool:
    T = _closed(M, T)
    return all(set_product(M, (a,), None, T) == T for a in T)


def is_gamma_group(M: GammaSemigroup, T: Iterable[int]) -> bool:
    return is_left_simple(M, T) and is_right_simple(M, T)


def gamma_subgroups(M: GammaSemigroup) -> list:
    """Every subset that is a closed Gamma-group, by size then lexicographic."""
    out = []
    for size in range(1, M.m + 1):
        for c in combinations(range(M.m), size):
            if is_sub_gamma_semigroup(M, c) and is_gamma_group(M, c):
                out.append(frozenset(c))
    return out


def is_union_of_gamma_groups(M: GammaSemigroup) -> bool:
    groups = gamma_subgroups(M)
    return frozenset().union(*groups) == M.carrier if groups else False


def disjoint_gamma_group_cover(M: GammaSemigroup) -> Optional[list]:
    """Exact cover of the carrier by closed Gamma-groups, found by backtracking."""
    groups = gamma_subgroups(M)
    by_min = {}
    for G in groups:
        by_min.setdefault(min(G), []).append(G)

    def cover(left: frozenset, chosen: list):
        if not left:
            return list(chosen)
        x = min(left)
        for G in by_min.get(x, ()):
            if G <= left:
                found = cover(left - G, chosen + [G])
                if found is not None:
                    return found
        return None

    return cover(M.carrier, [])


def gamma_group_decomposition(M: GammaSemigroup) -> Optional[Decomposition]:
    """The H-partition, if every H-class is a closed Gamma-group."""
    comps = []
    for block in h_partition(M).blocks:
        if not is_sub_gamma_semigroup(M, block) or not is_gamma_group(M, block):
            return None
        comps.append(frozenset(block))
    return Decomposition(tuple(comps), "disjoint", tuple("gamma-group" for _ in comps))


def _classes_simple(M: GammaSemigroup, part, simple) -> tuple:
    detail = {}
    for block in part.blocks:
        if not is_sub_gamma_semigroup(M, block):
            detail[block] = "not closed"
        elif not simple(M, block):
            detail[block] = "not simple"
        else:
            detail[block] = "ok"
    return all(v == "ok" for v in detail.values()), detail


def l_classes_left_simple(M: GammaSemigroup) -> tuple:
    """(every L-class is a left simple sub-Gamma-semigroup, per-class detail)"""
    return _classes_simple(M, l_partition(M), is_left_simple)


def r_classes_right_simple(M: GammaSemigroup) -> tuple:
    return _classes_simple(M, r_partition(M), is_right_simple)


def _need_zero(M: GammaSemigroup):
    if M.zero is None:
        raise ValueError("predicate is defined only for Gamma-semigroups with zero")


def is_0_simple(M: GammaSemigroup) -> bool:
    _need_zero(M)
    if set_product(M, M.elements, None, M.elements) == {M.zero}:
        return False
    return all(principal_two_sided_ideal(M, a) == M.carrier for a in M.elements if a != M.zero)


def nonzero_idempotents(M: GammaSemigroup) -> list:
    """Pairs ``(e, gamma)`` with ``e gamma e = e`` and ``e`` nonzero."""
    return [(e, c) for e in M.elements for c in M.gammas if e != M.zero and M.table[c][e][e] == e]


def below(M: GammaSemigroup, f: int, e: int, gamma: int) -> bool:
    """``f = f gamma e = e gamma f`` in the derived semigroup ``(M, gamma)``."""
    t = M.table[gamma]
    return t[f][e] == f and t[e][f] == f


def primitive_idempotents(M: GammaSemigroup) -> list:
    """Nonzero idempotent pairs ``(e, gamma)`` minimal among the nonzero
    gamma-idempotents of ``(M, gamma)``."""
    _need_zero(M)
    idem = nonzero_idempotents(M)
    return [
        (e, c) for (e, c) in idem
        if all(f == e for (f, d) in idem if d == c and below(M, f, e, c))
    ]


def is_completely_0_simple(M: GammaSemigroup) -> bool:
    _need_zero(M)
    return is_0_simple(M) and bool(primitive_idempotents(M))


def nonzero_dclasses(M: GammaSemigroup) -> list:
    return [b for b in d_partition(M).blocks if b != (M.zero,)]


def dclass_with_zero(M: GammaSemigroup, D) -> Optional[GammaSemigroup]:
    """The structure on ``D u {0}`` if that set is closed, else None."""
    _need_zero(M)
    D = tuple(sorted(D))
    if D not in d_partition(M).blocks or D == (M.zero,):
        raise ValueError(f"{D} is not a nonzero D-class")
    piece = frozenset(D) | {M.zero}
    if not is_sub_gamma_semigroup(M, piece):
        return None
    return restrict(M, piece)


@dataclass
class DecompositionFailure:
    piece: tuple
    reason: str
    escape: Optional[tuple] = None  # (a, gamma, b) with the product leaving the piece


def zero_disjoint_decomposition(M: GammaSemigroup) -> tuple:
    """``(Decomposition or None, failures)`` for the pieces ``D u {0}``."""
    _need_zero(M)
    comps, failures = [], []
    for D in nonzero_dclasses(M):
        piece = frozenset(D) | {M.zero}
        esc = escaping_product(M, piece)
        if esc is not None:
            failures.append(DecompositionFailure(D, "not closed", esc))
            continue
        if not is_completely_0_simple(restrict(M, piece)):
            failures.append(DecompositionFailure(D, "not completely 0-simple"))
            continue
        comps.append(piece)
    if failures:
        return None, failures
    return Decomposition(tuple(comps), "zero_disjoint", tuple("completely-0-simple" for _ in comps)), []


def zero_disjoint_completely_0_simple_decomposition(M: GammaSemigroup) -> Optional[Decomposition]:
    return zero_disjoint_decomposition(M)[0]


def mutually_annihilating(M: GammaSemigroup, pieces) -> bool:
    _need_zero(M)
    pieces = [frozenset(p) for p in pieces]
    if any(M.zero not in p for p in pieces):
        raise ValueError("every piece must contain the zero")
    z = {M.zero}
    return all(
        set_product(M, pieces[i], None, pieces[j]) == z
        for i in range(len(pieces)) for j in range(len(pieces)) if i != j
    )


def dclass_annihilation(M: GammaSemigroup) -> dict:
    """D-class -> whether ``D Gamma D == {0}``."""
    _need_zero(M)
    return {D: set_product(M, D, None, D) == {M.zero} for D in d_partition(M).blocks}


def regular_dclasses(M: GammaSemigroup) -> list:
    """Nonzero D-classes all of whose elements are regular in M."""
    return [D for D in nonzero_dclasses(M) if all(is_regular_element(M, x) for x in D)]
