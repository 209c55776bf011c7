"""One- and two-sided ideals, quasi-ideals, and 0-semiprimeness."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .core import ElementSet, GammaSemigroup, set_product

KINDS = ("left", "right", "two_sided", "quasi")
MAX_ENUM_M = 20


def _check_kind(kind: str, allow_quasi: bool = True):
    if kind not in KINDS or (kind == "quasi" and not allow_quasi):
        raise ValueError(f"unsupported ideal kind {kind!r}")


def principal_left_ideal(M: GammaSemigroup, a: int) -> ElementSet:
    return frozenset({a}) | set_product(M, M.elements, None, (a,))


def principal_right_ideal(M: GammaSemigroup, a: int) -> ElementSet:
    return frozenset({a}) | set_product(M, (a,), None, M.elements)


def principal_two_sided_ideal(M: GammaSemigroup, a: int) -> ElementSet:
    left = set_product(M, M.elements, None, (a,))
    return (frozenset({a}) | left | set_product(M, (a,), None, M.elements)
            | set_product(M, left, None, M.elements))


def ideal_closure(M: GammaSemigroup, S: Iterable[int], kind: str) -> ElementSet:
    """Smallest ideal of the given kind containing ``S``."""
    _check_kind(kind, allow_quasi=False)
    S = frozenset(S)
    if not S:
        raise ValueError("generating set must be nonempty")
    out = S
    if kind in ("left", "two_sided"):
        out |= set_product(M, M.elements, None, S)
    if kind in ("right", "two_sided"):
        out |= set_product(M, out, None, M.elements)
    return out


def is_ideal(M: GammaSemigroup, S: Iterable[int], kind: str) -> bool:
    _check_kind(kind)
    S = frozenset(S)
    if not S:
        raise ValueError("subset must be nonempty")
    left = set_product(M, M.elements, None, S)
    if kind == "left":
        return left <= S
    right = set_product(M, S, None, M.elements)
    if kind == "right":
        return right <= S
    if kind == "two_sided":
        return left <= S and right <= S
    return (left & right) <= S


def enumerate_ideals(M: GammaSemigroup, kind: str) -> list:
    """All nonempty ideals of ``kind``, ordered by size then lexicographically."""
    _check_kind(kind)
    if M.m > MAX_ENUM_M:
        raise ValueError(f"subset scan limited to m <= {MAX_ENUM_M}")
    return [
        frozenset(c)
        for size in range(1, M.m + 1)
        for c in combinations(range(M.m), size)
        if is_ideal(M, c, kind)
    ]


def is_0_semiprime(M: GammaSemigroup, A: Iterable[int], kind: str) -> bool:
    """``A`` is 0-semiprime when, for every x and gamma, a nonzero square
    ``x gamma x`` lying in A forces x into A."""
    if M.zero is None:
        raise ValueError("0-semiprimeness needs a zero")
    A = frozenset(A)
    if M.zero not in A or not is_ideal(M, A, kind):
        raise ValueError(f"not a {kind} ideal containing the zero")
    for x in M.elements:
        if x in A:
            continue
        for c in M.gammas:
            s = M.table[c][x][x]
            if s != M.zero and s in A:
                return False
    return True


def _semiprime_by_enumeration(M: GammaSemigroup, kind: str) -> bool:
    return all(is_0_semiprime(M, A, kind) for A in enumerate_ideals(M, kind) if M.zero in A)


def _semiprime_by_closure(M: GammaSemigroup, kind: str) -> bool:
    for x in M.elements:
        for c in M.gammas:
            s = M.table[c][x][x]
            if s != M.zero and x not in ideal_closure(M, (s,), kind):
                return False
    return True


def all_ideals_0_semiprime(M: GammaSemigroup, kind: str, algorithm: str = "both") -> bool:
    """Whether every ``kind`` ideal is 0-semiprime.

    ``algorithm="enumerate"`` tests each enumerated ideal, ``"closure"`` tests
    the ideal generated by each nonzero square ``x gamma x``. ``"both"`` runs the two and
    raises ``AssertionError`` if they disagree.
    """
    if M.zero is None:
        raise ValueError("0-semiprimeness needs a zero")
    _check_kind(kind, allow_quasi=False)
    if algorithm == "enumerate":
        return _semiprime_by_enumeration(M, kind)
    if algorithm == "closure":
        return _semiprime_by_closure(M, kind)
    a = _semiprime_by_enumeration(M, kind)
    b = _semiprime_by_closure(M, kind)
    if a != b:
        raise AssertionError(f"0-semiprime algorithms disagree on {kind} ideals: {a} vs {b}")
    return a
