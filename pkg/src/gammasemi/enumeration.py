"""Exhaustive and random generation of finite Gamma-semigroups.

Tables are filled depth first, one cell at a time, in the flat order
``(gamma, a, b)``. Every time a cell is assigned, each associativity triple
whose four table lookups have just become available is checked, so a partial
table is abandoned as soon as it contains a violated triple.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Optional

from .core import GammaSemigroup, validate


@dataclass(frozen=True)
class EnumSpec:
    m: int
    g: int
    up_to_iso: bool = False
    include_anti_iso: bool = False
    require_zero: bool = False
    budget: Optional[int] = None

    def __post_init__(self):
        if self.m < 1 or self.g < 1:
            raise ValueError("m and g must be at least 1")
        if self.budget is not None and self.budget < 0:
            raise ValueError("budget must be nonnegative")


class _Budget(Exception):
    pass


def _consistent(t: list, k: int, m: int, g: int) -> bool:
    """Check every triple whose last-available lookup is cell ``k``."""
    mm = m * m
    gam, rest = divmod(k, mm)
    a, b = divmod(rest, m)
    v = t[k]

    def ok(al, be, x, y, z):
        p = t[al * mm + x * m + y]
        if p < 0:
            return True
        q = t[be * mm + y * m + z]
        if q < 0:
            return True
        lhs = t[be * mm + p * m + z]
        rhs = t[al * mm + x * m + q]
        return lhs < 0 or rhs < 0 or lhs == rhs

    for be in range(g):
        for z in range(m):
            if not ok(gam, be, a, b, z):
                return False
    for al in range(g):
        for x in range(m):
            if not ok(al, gam, x, a, b):
                return False
    # cell k as the outer lookup on either side
    for al in range(g):
        base = al * mm
        for x in range(m):
            for y in range(m):
                if t[base + x * m + y] == a and not ok(al, gam, x, y, b):
                    return False
    for be in range(g):
        base = be * mm
        for y in range(m):
            for z in range(m):
                if t[base + y * m + z] == b and not ok(gam, be, a, y, z):
                    return False
    return v >= 0


def _dfs(m: int, g: int, prefix: tuple, limit: Optional[int], counter: list) -> Iterator[tuple]:
    n = g * m * m
    t = [-1] * n
    for i, v in enumerate(prefix):
        t[i] = v
        if not _consistent(t, i, m, g):
            return
    k0 = len(prefix)
    if k0 == n:
        yield tuple(t)
        return
    choice = [-1] * n
    k = k0
    while k >= k0:
        choice[k] += 1
        if choice[k] >= m:
            choice[k] = -1
            t[k] = -1
            k -= 1
            continue
        counter[0] += 1
        if limit is not None and counter[0] > limit:
            raise _Budget
        t[k] = choice[k]
        if not _consistent(t, k, m, g):
            continue
        if k == n - 1:
            yield tuple(t)
            continue
        k += 1


def _transforms(m: int, g: int, anti: bool):
    for sigma in permutations(range(m)):
        for tau in permutations(range(g)):
            yield sigma, tau, False
            if anti:
                yield sigma, tau, True


def transform(flat: tuple, m: int, g: int, sigma, tau, flip: bool = False) -> tuple:
    """Relabel by carrier permutation ``sigma`` and operator permutation ``tau``.

    With ``flip`` the result is the anti-isomorphic copy ``a . b := b gamma a``.
    """
    mm = m * m
    out = [0] * len(flat)
    for c in range(g):
        for a in range(m):
            for b in range(m):
                src = flat[c * mm + (b * m + a if flip else a * m + b)]
                out[tau[c] * mm + sigma[a] * m + sigma[b]] = sigma[src]
    return tuple(out)


def canonical_form(flat: tuple, m: int, g: int, anti: bool = False) -> tuple:
    return min(transform(flat, m, g, s, t, f) for s, t, f in _transforms(m, g, anti))


def is_canonical(flat: tuple, m: int, g: int, anti: bool = False) -> bool:
    return all(flat <= transform(flat, m, g, s, t, f) for s, t, f in _transforms(m, g, anti))


def orbit(flat: tuple, m: int, g: int, anti: bool = False) -> set:
    return {transform(flat, m, g, s, t, f) for s, t, f in _transforms(m, g, anti)}


def _has_zero_flat(flat: tuple, m: int, g: int) -> bool:
    mm = m * m
    return any(
        all(flat[c * mm + z * m + x] == z and flat[c * mm + x * m + z] == z for c in range(g) for x in range(m))
        for z in range(m)
    )


def _filtered(spec: EnumSpec, flats) -> Iterator[tuple]:
    for flat in flats:
        if spec.require_zero and not _has_zero_flat(flat, spec.m, spec.g):
            continue
        if spec.up_to_iso and not is_canonical(flat, spec.m, spec.g, spec.include_anti_iso):
            continue
        yield flat


def _subtree(args) -> tuple:
    spec, prefix = args
    counter = [0]
    found = list(_filtered(spec, _dfs(spec.m, spec.g, prefix, None, counter)))
    return counter[0], found


def _prefixes(m: int, g: int, target: int) -> list:
    """Valid partial tables of the smallest depth with at least ``target`` nodes."""
    n = g * m * m
    level = [()]
    depth = 0
    while len(level) < target and depth < n:
        nxt = []
        for p in level:
            for v in range(m):
                t = list(p) + [v] + [-1] * (n - depth - 1)
                if all(_consistent(t, i, m, g) for i in range(depth + 1)):
                    nxt.append(p + (v,))
        level = nxt
        depth += 1
    return level


def default_workers() -> int:
    env = os.environ.get("GSGP_WORKERS")
    if env:
        return max(1, int(env))
    return 1


def to_structure(flat: tuple, m: int, g: int) -> GammaSemigroup:
    return validate(m, g, flat)


class Enumeration:
    """Iterator over the Gamma-semigroups selected by an :class:`EnumSpec`.

    After iteration, ``nodes`` holds the number of search nodes visited and
    ``budget_exhausted`` tells whether the stream was cut short by the budget.
    Parallel runs (``workers > 1``) split the search forest on a prefix of
    the table and concatenate the subtree results in prefix order, which is
    exactly the sequential emission order.
    """

    def __init__(self, spec: EnumSpec, workers: Optional[int] = None):
        self.spec = spec
        self.workers = default_workers() if workers is None else workers
        self._counter = [0]
        self.budget_exhausted = False

    @property
    def nodes(self) -> int:
        n = self._counter[0]
        return n if self.spec.budget is None else min(n, self.spec.budget)

    def flats(self) -> Iterator[tuple]:
        spec = self.spec
        if self.workers > 1 and spec.budget is None:
            prefixes = _prefixes(spec.m, spec.g, 4 * self.workers)
            with ProcessPoolExecutor(self.workers) as pool:
                for nodes, chunk in pool.map(_subtree, [(spec, p) for p in prefixes]):
                    self._counter[0] += nodes
                    yield from chunk
            return
        try:
            yield from _filtered(spec, _dfs(spec.m, spec.g, (), spec.budget, self._counter))
        except _Budget:
            self.budget_exhausted = True

    def __iter__(self) -> Iterator[GammaSemigroup]:
        for flat in self.flats():
            yield to_structure(flat, self.spec.m, self.spec.g)


def enumerate_gamma_semigroups(spec: EnumSpec, workers: Optional[int] = None) -> Enumeration:
    return Enumeration(spec, workers)


def census(max_m: int, max_g: int, up_to_iso: bool = False, include_anti_iso: bool = False,
           require_zero: bool = False, workers: Optional[int] = None) -> dict:
    counts = {}
    for m in range(1, max_m + 1):
        for g in range(1, max_g + 1):
            spec = EnumSpec(m, g, up_to_iso, include_anti_iso, require_zero)
            counts[(m, g)] = sum(1 for _ in Enumeration(spec, workers).flats())
    return counts


def random_instance(m: int, g: int, seed: int, attempts: int = 1000) -> Optional[GammaSemigroup]:
    """Rejection-sample a uniformly random valid table; fall back to a
    randomly relabelled constructor output once ``attempts`` are spent."""
    rng = random.Random(seed)
    n = g * m * m
    for _ in range(attempts):
        flat = tuple(rng.randrange(m) for _ in range(n))
        mm = m * m
        if all(
            flat[be * mm + flat[al * mm + a * m + b] * m + c] == flat[al * mm + a * m + flat[be * mm + b * m + c]]
            for al, be, a, b, c in product(range(g), range(g), range(m), range(m), range(m))
        ):
            return to_structure(flat, m, g)
    return _fallback(m, g, rng)


def _fallback(m: int, g: int, rng: random.Random) -> GammaSemigroup:
    from .constructors import cyclic_group, group_with_zero

    kinds = ["null", "left-zero", "right-zero"]
    if 1 <= g <= m - 1:
        kinds.append("group-zero")
    kind = rng.choice(kinds)
    if kind == "group-zero":
        gamma = sorted(rng.sample(range(m - 1), g))
        flat = group_with_zero(cyclic_group(m - 1), gamma).flat()
    else:
        z = rng.randrange(m)
        cell = {
            "null": lambda a, b: z,
            "left-zero": lambda a, b: a,
            "right-zero": lambda a, b: b,
        }[kind]
        flat = tuple(cell(a, b) for _ in range(g) for a in range(m) for b in range(m))
    sigma = list(range(m))
    rng.shuffle(sigma)
    return to_structure(transform(flat, m, g, sigma, tuple(range(g))), m, g)
