"""Finite Gamma-semigroups stored as dense multiplication tables.

Elements of the carrier M are the integers ``0..m-1`` and operators of Gamma
are ``0..g-1``. ``table[gamma][a][b]`` is the product ``a gamma b``. Names are
presentation metadata only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

ElementSet = frozenset  # frozenset[int]; exact extensional equality

Table = tuple  # tuple[tuple[tuple[int, ...], ...], ...]


@dataclass(frozen=True)
class Violation:
    kind: str  # "range" | "associativity" | "zero-law" | "shape"
    indices: tuple
    detail: str = ""

    def __str__(self):
        return f"{self.kind} at {self.indices}" + (f": {self.detail}" if self.detail else "")


class InvalidTable(ValueError):
    """Raised by :func:`validate` with every violation found."""

    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        head = "; ".join(str(v) for v in self.violations[:3])
        more = "" if len(self.violations) <= 3 else f" (+{len(self.violations) - 3} more)"
        super().__init__(f"{len(self.violations)} violation(s): {head}{more}")


@dataclass(frozen=True)
class GammaSemigroup:
    m: int
    g: int
    table: Table
    element_names: tuple = field(default=None)
    gamma_names: tuple = field(default=None)
    zero: Optional[int] = None

    def __post_init__(self):
        if self.element_names is None:
            object.__setattr__(self, "element_names", tuple(f"e{i}" for i in range(self.m)))
        if self.gamma_names is None:
            object.__setattr__(self, "gamma_names", tuple(f"g{i}" for i in range(self.g)))

    def mul(self, a: int, gamma: int, b: int) -> int:
        return self.table[gamma][a][b]

    def evaluate(self, word: Sequence[int]) -> int:
        """Evaluate ``x0 g0 x1 g1 x2 ...`` left to right."""
        acc = word[0]
        for i in range(1, len(word), 2):
            acc = self.table[word[i]][acc][word[i + 1]]
        return acc

    @property
    def elements(self) -> range:
        return range(self.m)

    @property
    def gammas(self) -> range:
        return range(self.g)

    @property
    def carrier(self) -> ElementSet:
        return frozenset(range(self.m))

    def name(self, a: int) -> str:
        return self.element_names[a]

    def names(self, s: Iterable[int]) -> list:
        return [self.element_names[a] for a in sorted(s)]

    def flat(self) -> tuple:
        return tuple(v for layer in self.table for row in layer for v in row)

    def __repr__(self):
        return f"GammaSemigroup(m={self.m}, g={self.g}, zero={self.zero})"


def _normalize(m: int, g: int, table) -> list:
    """Accept a nested ``g x m x m`` table or a flat ``g*m*m`` sequence."""
    table = list(table)
    if len(table) == g * m * m and all(isinstance(v, int) for v in table):
        return [[list(table[(c * m + a) * m:(c * m + a + 1) * m]) for a in range(m)] for c in range(g)]
    return [[list(row) for row in layer] for layer in table]


def find_violations(m: int, g: int, table, zero: Optional[int] = None) -> list:
    """Every violation of the Gamma-semigroup laws, in a deterministic order.

    Range problems are reported alone (products cannot be followed through
    out-of-range entries); otherwise associativity failures are ordered by
    ``(alpha, beta, a, b, c)``.
    """
    if m < 1 or g < 1:
        return [Violation("shape", (m, g), "m and g must be at least 1")]
    t = _normalize(m, g, table)
    if len(t) != g or any(len(layer) != m for layer in t) or any(len(row) != m for layer in t for row in layer):
        return [Violation("shape", (m, g), "table must have g*m*m entries")]
    out = []
    for c, a, b in product(range(g), range(m), range(m)):
        v = t[c][a][b]
        if not isinstance(v, int) or not 0 <= v < m:
            out.append(Violation("range", (c, a, b), f"entry {v!r} not in [0, {m})"))
    if out:
        return out
    for al, be, a, b, c in product(range(g), range(g), range(m), range(m), range(m)):
        lhs = t[be][t[al][a][b]][c]
        rhs = t[al][a][t[be][b][c]]
        if lhs != rhs:
            out.append(Violation("associativity", (al, be, a, b, c), f"(a al b) be c = {lhs} != {rhs} = a al (b be c)"))
    if zero is not None:
        found = _scan_zero(t, m, g)
        if found != zero:
            out.append(Violation("zero-law", (zero,), f"declared zero is not absorbing (detected: {found})"))
    return out


def _scan_zero(t, m: int, g: int) -> Optional[int]:
    for z in range(m):
        if all(t[c][z][x] == z and t[c][x][z] == z for c in range(g) for x in range(m)):
            return z
    return None


def validate(m: int, g: int, table, element_names=None, gamma_names=None, zero: Optional[int] = None) -> GammaSemigroup:
    """Build a validated structure or raise :class:`InvalidTable`.

    ``zero`` may be passed to assert the expected zero; the stored zero is
    always the detected one.
    """
    violations = find_violations(m, g, table, zero)
    if element_names is not None:
        element_names = tuple(element_names)
        if len(element_names) != m or len(set(element_names)) != m:
            violations.append(Violation("shape", (m,), "element names must be m distinct tokens"))
    if gamma_names is not None:
        gamma_names = tuple(gamma_names)
        if len(gamma_names) != g or len(set(gamma_names)) != g:
            violations.append(Violation("shape", (g,), "gamma names must be g distinct tokens"))
    if violations:
        raise InvalidTable(violations)
    t = tuple(tuple(tuple(row) for row in layer) for layer in _normalize(m, g, table))
    return GammaSemigroup(m, g, t, element_names, gamma_names, _scan_zero(t, m, g))


def find_zero(M: GammaSemigroup) -> Optional[int]:
    return _scan_zero(M.table, M.m, M.g)


def set_product(M: GammaSemigroup, A: Iterable[int], G: Optional[Iterable[int]], B: Iterable[int]) -> ElementSet:
    """``A G B = {a gamma b : a in A, gamma in G, b in B}``; ``G=None`` means all of Gamma."""
    gs = M.gammas if G is None else list(G)
    if G is not None and not gs:
        raise ValueError("operator subset must be nonempty")
    B = list(B)
    t = M.table
    return frozenset(t[c][a][b] for c in gs for a in A for b in B)


def derived_semigroup(M: GammaSemigroup, gamma: int) -> tuple:
    """The plain semigroup ``(M, gamma)`` as an ``m x m`` table."""
    if not 0 <= gamma < M.g:
        raise IndexError(f"operator {gamma} out of range [0, {M.g})")
    return M.table[gamma]


def is_associative(op: Sequence[Sequence[int]]) -> bool:
    n = len(op)
    return all(op[op[a][b]][c] == op[a][op[b][c]] for a in range(n) for b in range(n) for c in range(n))


def is_sub_gamma_semigroup(M: GammaSemigroup, T: Iterable[int]) -> bool:
    T = frozenset(T)
    if not T:
        raise ValueError("subset must be nonempty")
    return set_product(M, T, None, T) <= T


def escaping_product(M: GammaSemigroup, T: Iterable[int]) -> Optional[tuple]:
    """First ``(a, gamma, b)`` with ``a, b`` in T and ``a gamma b`` outside T."""
    T = frozenset(T)
    for a in sorted(T):
        for c in M.gammas:
            for b in sorted(T):
                if M.table[c][a][b] not in T:
                    return (a, c, b)
    return None


def idempotent_pairs(M: GammaSemigroup) -> list:
    return [(e, c) for e in M.elements for c in M.gammas if M.table[c][e][e] == e]


def restrict(M: GammaSemigroup, T: Iterable[int]) -> GammaSemigroup:
    """The sub-Gamma-semigroup on T, relabelled densely in increasing order."""
    old = sorted(T)
    if not is_sub_gamma_semigroup(M, old):
        raise ValueError("subset is not closed under the Gamma-multiplication")
    new = {x: i for i, x in enumerate(old)}
    t = [[[new[M.table[c][a][b]] for b in old] for a in old] for c in M.gammas]
    return validate(len(old), M.g, t, [M.element_names[x] for x in old], M.gamma_names)
