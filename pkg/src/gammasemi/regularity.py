"""Regularity predicates, each paired with an independent second route.

Positive verdicts carry :class:`Witness` objects: a product word that, when
evaluated left to right through the table, reproduces its target. Searches
try the smallest solving element first so witnesses are deterministic.

Clauses that let a vanishing square stand in for a solution are read per
operator: for each gamma, either ``x gamma x = 0`` or the solution equation
holds for that gamma.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import ElementSet, GammaSemigroup, derived_semigroup
from .green import h_partition, l_partition, r_partition


@dataclass(frozen=True)
class Witness:
    element: int
    target: int
    word: tuple  # alternating elements and operators
    clause: str = "solution"  # or "zero"

    def replays(self, M: GammaSemigroup) -> bool:
        return M.evaluate(self.word) == self.target

    def render(self, M: GammaSemigroup) -> str:
        parts = [M.element_names[v] if i % 2 == 0 else M.gamma_names[v] for i, v in enumerate(self.word)]
        return f"{M.element_names[self.target]}={'.'.join(parts)}"


@dataclass
class PropertyReport:
    name: str
    holds: bool
    witnesses: list = field(default_factory=list)
    counterexample: Optional[tuple] = None  # (element, operators...) that fails
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.holds


def _power_word(x: int, gamma: int, k: int) -> list:
    w = [x]
    for _ in range(k - 1):
        w += [gamma, x]
    return w


def _solve(M: GammaSemigroup, target: int, before: list, after: list) -> Optional[tuple]:
    """Smallest u with ``before + [u] + after`` evaluating to ``target``."""
    for u in M.elements:
        w = tuple(before + [u] + after)
        if M.evaluate(w) == target:
            return w
    return None


def regular_witness(M: GammaSemigroup, a: int) -> Optional[Witness]:
    for u in M.elements:
        for c1 in M.gammas:
            for c2 in M.gammas:
                w = (a, c1, u, c2, a)
                if M.evaluate(w) == a:
                    return Witness(a, a, w)
    return None


def is_regular_element(M: GammaSemigroup, a: int) -> bool:
    return regular_witness(M, a) is not None


def irregular_elements(M: GammaSemigroup) -> ElementSet:
    return frozenset(a for a in M.elements if not is_regular_element(M, a))


def is_regular(M: GammaSemigroup) -> bool:
    return not irregular_elements(M)


# one-sided strong regularity

def _one_sided_report(M: GammaSemigroup, side: str) -> PropertyReport:
    name = f"{side}-strongly-regular"
    witnesses = []
    for a in M.elements:
        for c in M.gammas:
            if side == "left":
                w = _solve(M, a, [], [c, a, c, a])
            else:
                w = _solve(M, a, [a, c, a, c], [])
            if w is None:
                return PropertyReport(name, False, counterexample=(a, c))
            witnesses.append(Witness(a, a, w))
    return PropertyReport(name, True, witnesses)


def left_strongly_regular_report(M: GammaSemigroup) -> PropertyReport:
    return _one_sided_report(M, "left")


def right_strongly_regular_report(M: GammaSemigroup) -> PropertyReport:
    return _one_sided_report(M, "right")


def _via_green(M: GammaSemigroup, part) -> bool:
    return all(part.same(a, M.table[c][a][a]) for a in M.elements for c in M.gammas)


def is_left_strongly_regular(M: GammaSemigroup, method: str = "direct") -> bool:
    """Every ``a`` solves ``a = u gamma a gamma a`` for every gamma.

    ``method="green"`` instead tests ``a L (a gamma a)`` for all a and gamma.
    """
    if method == "green":
        return _via_green(M, l_partition(M))
    return left_strongly_regular_report(M).holds


def is_right_strongly_regular(M: GammaSemigroup, method: str = "direct") -> bool:
    if method == "green":
        return _via_green(M, r_partition(M))
    return right_strongly_regular_report(M).holds


# two-sided strong regularity, three ways

def _plain_left_regular(op) -> bool:
    n = len(op)
    return all(any(op[x][op[a][a]] == a for x in range(n)) for a in range(n))


def _plain_right_regular(op) -> bool:
    n = len(op)
    return all(any(op[op[a][a]][y] == a for y in range(n)) for a in range(n))


def _strongly_regular_derived(M: GammaSemigroup) -> bool:
    for c in M.gammas:
        op = derived_semigroup(M, c)
        if not (_plain_left_regular(op) and _plain_right_regular(op)):
            return False
    return True


def _strongly_regular_mixed(M: GammaSemigroup) -> bool:
    for a in M.elements:
        for c1 in M.gammas:
            for c2 in M.gammas:
                if _solve(M, a, [], [c1, a, c2, a]) is None or _solve(M, a, [a, c2, a, c1], []) is None:
                    return False
    return True


def strong_regularity(M: GammaSemigroup) -> PropertyReport:
    """Strong regularity by both one-sided conditions (the reported verdict),
    by left/right regularity of every derived semigroup, and by the
    mixed-operator condition. ``detail["anomaly"]`` flags any disagreement."""
    left = left_strongly_regular_report(M)
    right = right_strongly_regular_report(M)
    verdicts = {
        "one_sided": left.holds and right.holds,
        "derived": _strongly_regular_derived(M),
        "mixed": _strongly_regular_mixed(M),
    }
    holds = verdicts["one_sided"]
    report = PropertyReport("strongly-regular", holds, detail=dict(verdicts))
    report.detail["anomaly"] = len(set(verdicts.values())) > 1
    if holds:
        report.witnesses = left.witnesses + right.witnesses
    else:
        report.counterexample = left.counterexample or right.counterexample
    return report


def is_strongly_regular(M: GammaSemigroup, algorithm: str = "one_sided") -> bool:
    if algorithm == "one_sided":
        return is_left_strongly_regular(M) and is_right_strongly_regular(M)
    if algorithm == "derived":
        return _strongly_regular_derived(M)
    if algorithm == "mixed":
        return _strongly_regular_mixed(M)
    raise ValueError(f"unknown algorithm {algorithm!r}")


# the s(m, n) and s(m, n)^0 classes

@dataclass(frozen=True)
class SmnParams:
    m: int
    n: int
    zero_variant: bool = True

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be nonnegative")
        if self.zero_variant and self.m + self.n <= 1:
            raise ValueError("zero variant needs m + n > 1")
        if self.m + self.n < 1:
            raise ValueError("need m + n >= 1")


def smn_witnesses(M: GammaSemigroup, x: int, p: SmnParams) -> Optional[list]:
    """Witnesses that ``x`` lies in s(m, n) (or s(m, n)^0), else None.

    For each pair (alpha, beta): the alpha-power of length m vanishes, or the
    beta-power of length n vanishes, or some u gives
    ``x = x alpha ... alpha x alpha u beta x beta ... beta x``. A side of
    length zero is dropped together with its adjacent operator.
    """
    z = M.zero if p.zero_variant else None
    out = []
    for al in M.gammas:
        for be in M.gammas:
            if z is not None and p.m > 0 and M.evaluate(_power_word(x, al, p.m)) == z:
                out.append(Witness(x, z, tuple(_power_word(x, al, p.m)), "zero"))
                continue
            if z is not None and p.n > 0 and M.evaluate(_power_word(x, be, p.n)) == z:
                out.append(Witness(x, z, tuple(_power_word(x, be, p.n)), "zero"))
                continue
            before = _power_word(x, al, p.m) + [al] if p.m else []
            after = [v for _ in range(p.n) for v in (be, x)]
            w = _solve(M, x, before, after)
            if w is None:
                return None
            out.append(Witness(x, x, w))
    return out


def in_class_smn(M: GammaSemigroup, x: int, p: SmnParams) -> bool:
    return smn_witnesses(M, x, p) is not None


def in_class_smn_all(M: GammaSemigroup, p: SmnParams) -> bool:
    return all(in_class_smn(M, x, p) for x in M.elements)


# 2^0-strong regularity and its relatives (structures with zero)

def _need_zero(M: GammaSemigroup):
    if M.zero is None:
        raise ValueError("predicate is defined only for Gamma-semigroups with zero")


def two_zero_report(M: GammaSemigroup) -> PropertyReport:
    """For every x and gamma: ``x gamma x = 0`` or ``x in x gamma x gamma M gamma x gamma x``."""
    _need_zero(M)
    witnesses = []
    for x in M.elements:
        for c in M.gammas:
            s = M.table[c][x][x]
            if s == M.zero:
                witnesses.append(Witness(x, M.zero, (x, c, x), "zero"))
                continue
            w = _solve(M, x, [x, c, x, c], [c, x, c, x])
            if w is None:
                return PropertyReport("2^0-strongly-regular", False, counterexample=(x, c))
            witnesses.append(Witness(x, x, w))
    return PropertyReport("2^0-strongly-regular", True, witnesses)


def is_2_0_strongly_regular(M: GammaSemigroup, algorithm: str = "both") -> bool:
    """``algorithm="definition"`` solves the defining equation; ``"green"``
    tests ``x gamma x = 0`` or ``x gamma x`` in the H-class of x. ``"both"``
    raises ``AssertionError`` on disagreement."""
    _need_zero(M)
    a = b = None
    if algorithm in ("definition", "both"):
        a = two_zero_report(M).holds
    if algorithm in ("green", "both"):
        H = h_partition(M)
        b = all(M.table[c][x][x] == M.zero or H.same(x, M.table[c][x][x]) for x in M.elements for c in M.gammas)
    if algorithm == "both" and a != b:
        raise AssertionError(f"2^0-strong regularity routes disagree: definition={a}, green={b}")
    return a if a is not None else b


def is_left_0_strongly_regular(M: GammaSemigroup) -> bool:
    _need_zero(M)
    return in_class_smn_all(M, SmnParams(0, 2))


def is_right_0_strongly_regular(M: GammaSemigroup) -> bool:
    _need_zero(M)
    return in_class_smn_all(M, SmnParams(2, 0))


def is_intra_0_strongly_regular(M: GammaSemigroup) -> bool:
    """For every x and alpha: ``x alpha x = 0`` or ``x = u alpha x alpha x alpha v``."""
    _need_zero(M)
    for x in M.elements:
        for al in M.gammas:
            if M.table[al][x][x] == M.zero:
                continue
            core = M.evaluate((x, al, x, al, x))
            if not any(M.evaluate((u, al, core, al, v)) == x for u in M.elements for v in M.elements):
                return False
    return True
