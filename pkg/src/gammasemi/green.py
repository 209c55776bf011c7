"""Green's relations as partitions of the carrier, and eggbox diagrams.

``a L b`` iff ``{a} u M Gamma a == {b} u M Gamma b``; R and J use the right
and two-sided principal ideals; H is the meet of L and R; D is their join.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import GammaSemigroup
from .ideals import principal_left_ideal, principal_right_ideal, principal_two_sided_ideal

RELATIONS = ("L", "R", "H", "D", "J")


@dataclass(frozen=True)
class Partition:
    block_of: tuple  # block index per element
    blocks: tuple  # sorted tuples, ordered by least element

    @classmethod
    def from_labels(cls, labels) -> "Partition":
        groups = {}
        for x, lab in enumerate(labels):
            groups.setdefault(lab, []).append(x)
        blocks = tuple(sorted(tuple(b) for b in groups.values()))
        block_of = [0] * len(labels)
        for i, b in enumerate(blocks):
            for x in b:
                block_of[x] = i
        return cls(tuple(block_of), blocks)

    def block(self, x: int) -> tuple:
        return self.blocks[self.block_of[x]]

    def same(self, a: int, b: int) -> bool:
        return self.block_of[a] == self.block_of[b]

    def meet(self, other: "Partition") -> "Partition":
        return Partition.from_labels(list(zip(self.block_of, other.block_of)))

    def join(self, other: "Partition") -> "Partition":
        parent = list(range(len(self.block_of)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in (self, other):
            for b in p.blocks:
                for x in b[1:]:
                    parent[find(x)] = find(b[0])
        return Partition.from_labels([find(x) for x in range(len(parent))])

    def refines(self, other: "Partition") -> bool:
        return all(other.same(b[0], x) for b in self.blocks for x in b)

    def __len__(self):
        return len(self.blocks)


@lru_cache(maxsize=4096)
def _partitions(M: GammaSemigroup) -> dict:
    L = Partition.from_labels([principal_left_ideal(M, a) for a in M.elements])
    R = Partition.from_labels([principal_right_ideal(M, a) for a in M.elements])
    J = Partition.from_labels([principal_two_sided_ideal(M, a) for a in M.elements])
    return {"L": L, "R": R, "H": L.meet(R), "D": L.join(R), "J": J}


def l_partition(M: GammaSemigroup) -> Partition:
    return _partitions(M)["L"]


def r_partition(M: GammaSemigroup) -> Partition:
    return _partitions(M)["R"]


def h_partition(M: GammaSemigroup) -> Partition:
    return _partitions(M)["H"]


def d_partition(M: GammaSemigroup) -> Partition:
    return _partitions(M)["D"]


def j_partition(M: GammaSemigroup) -> Partition:
    return _partitions(M)["J"]


def partition(M: GammaSemigroup, rel: str) -> Partition:
    if rel not in RELATIONS:
        raise ValueError(f"unknown relation {rel!r}")
    return _partitions(M)[rel]


def related(M: GammaSemigroup, rel: str, a: int, b: int) -> bool:
    return partition(M, rel).same(a, b)


def compose(M: GammaSemigroup, first: str, second: str) -> Partition | None:
    """The relational composite ``first o second`` as a partition, or None
    when the composite is not an equivalence relation."""
    p, q = partition(M, first), partition(M, second)
    pairs = {(a, c) for a in M.elements for b in p.block(a) for c in q.block(b)}
    labels = [frozenset(c for (x, c) in pairs if x == a) for a in M.elements]
    part = Partition.from_labels(labels)
    if any(labels[a] != frozenset(part.block(a)) for a in M.elements):
        return None
    return part


@dataclass(frozen=True)
class Eggbox:
    dclass: tuple
    rows: tuple  # R-classes inside the D-class
    cols: tuple  # L-classes inside the D-class
    cells: tuple  # cells[i][j] = H-class (tuple, possibly empty)

    def render(self, M: GammaSemigroup) -> str:
        lines = []
        for row in self.cells:
            lines.append(" ".join("{" + ",".join(M.names(c)) + "}" if c else "·" for c in row))
        return "\n".join(lines)


def eggbox(M: GammaSemigroup, dblock) -> Eggbox:
    D = d_partition(M)
    dblock = tuple(sorted(dblock))
    if dblock not in D.blocks:
        raise ValueError(f"{dblock} is not a D-class")
    L, R = l_partition(M), r_partition(M)
    rows = tuple(sorted({R.block(x) for x in dblock}))
    cols = tuple(sorted({L.block(x) for x in dblock}))
    cells = tuple(tuple(tuple(sorted(set(r) & set(c))) for c in cols) for r in rows)
    return Eggbox(dblock, rows, cols, cells)


def render_eggboxes(M: GammaSemigroup) -> str:
    return "\n\n".join(eggbox(M, b).render(M) for b in d_partition(M).blocks)
