"""Set partitions as canonical words, denesting, and nonnesting partitions.

A set partition of [n] is stored as the word whose blocks are numbered by
increasing minima, e.g. {{1,4},{2,5},{3}} is ``12312``.  Its arcs are the
pairs of consecutive elements inside a block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .words import Word, restricted_growth, word_str

__all__ = [
    "SetPartition", "StaircaseDiagram", "NestingError",
    "canonical", "from_blocks", "blocks", "arcs", "set_partitions",
    "find_nesting", "denest", "is_nonnesting", "nonnesting_partitions",
    "restrict_interval", "eta", "eta_inverse", "nn_leq", "catalan",
    "SCAN_ORDERS",
]


class NestingError(ValueError):
    """A nonnesting partition was required."""


def canonical(w: Sequence) -> Word:
    """Relabel blocks by order of first occurrence."""
    label: dict = {}
    out = []
    for a in w:
        if a not in label:
            label[a] = len(label) + 1
        out.append(label[a])
    return tuple(out)


class SetPartition(tuple):
    """Canonical word of a set partition (first occurrences 1, 2, 3, ...)."""

    __slots__ = ()

    def __new__(cls, word: Iterable[int] = ()):
        w = tuple(int(a) for a in word)
        if canonical(w) != w:
            raise ValueError(f"{word_str(w)} is not in canonical block order")
        return super().__new__(cls, w)

    def __repr__(self):
        return f"SetPartition({word_str(self)!r})"

    def __str__(self):
        return word_str(self)


def from_blocks(bs: Iterable[Iterable[int]], n: int | None = None) -> Word:
    """Canonical word of a partition given by its blocks (elements 1-based)."""
    bs = [sorted(b) for b in bs if b]
    size = n if n is not None else sum(len(b) for b in bs)
    w = [0] * size
    for k, b in enumerate(bs, 1):
        for x in b:
            if w[x - 1]:
                raise ValueError(f"element {x} appears in two blocks")
            w[x - 1] = k
    if 0 in w:
        raise ValueError("blocks do not cover [n]")
    return canonical(w)


def blocks(pi: Sequence[int]) -> list[list[int]]:
    """Blocks as sorted lists of 1-based elements, ordered by minima."""
    out: dict[int, list[int]] = {}
    for i, a in enumerate(pi, 1):
        out.setdefault(a, []).append(i)
    return sorted(out.values())


def arcs(pi: Sequence[int]) -> list[tuple[int, int]]:
    out = []
    for b in blocks(pi):
        out.extend(zip(b, b[1:]))
    return sorted(out)


@lru_cache(maxsize=None)
def set_partitions(n: int) -> tuple[Word, ...]:
    return tuple(sorted(restricted_growth(n)))


def _nestings(pi: Sequence[int]) -> list[tuple[int, int, int, int]]:
    """All (i, l, j, k): (i, l) an arc and (j, k) an arc strictly inside it."""
    a = arcs(pi)
    out = []
    for (i, l) in a:
        for (j, k) in a:
            if i < j and k < l:
                out.append((i, l, j, k))
    return out


def _scan_min_l(nest):
    return min(nest, key=lambda q: (q[1], q[0]))


def _scan_max_l(nest):
    return max(nest, key=lambda q: (q[1], -q[0]))


def _scan_min_i(nest):
    return min(nest, key=lambda q: (q[0], q[1]))


def _scan_widest(nest):
    return max(nest, key=lambda q: (q[1] - q[0], -q[0]))


SCAN_ORDERS: dict[str, Callable] = {
    "min-l": _scan_min_l,
    "max-l": _scan_max_l,
    "min-i": _scan_min_i,
    "widest": _scan_widest,
}


def find_nesting(pi: Sequence[int]) -> tuple[int, int] | None:
    """The outer arc of the first nesting in the default scan order, if any."""
    nest = _nestings(pi)
    if not nest:
        return None
    i, l, _, _ = _scan_min_l(nest)
    return i, l


def denest(pi: Sequence[int], order: str = "min-l") -> Word:
    """Split outer arcs of nestings until the partition is nonnesting.

    An arc (i, l) whose interval strictly contains two elements j < k of a
    common other block (equivalently, an arc of another block) is cut: its
    block splits into the part up to i and the part from l on.
    """
    choose = SCAN_ORDERS[order]
    w = list(canonical(pi))
    fresh = max(w, default=0)
    while True:
        nest = _nestings(w)
        if not nest:
            return canonical(w)
        i, l, _, _ = choose(nest)
        label = w[i - 1]
        fresh += 1
        for x in range(l, len(w) + 1):
            if w[x - 1] == label:
                w[x - 1] = fresh


def is_nonnesting(pi: Sequence[int]) -> bool:
    return not _nestings(pi)


@lru_cache(maxsize=None)
def nonnesting_partitions(n: int) -> tuple[Word, ...]:
    return tuple(p for p in set_partitions(n) if is_nonnesting(p))


def restrict_interval(pi: Sequence[int], lo: int, hi: int) -> Word:
    """Partition induced on the interval [lo, hi], relabelled to [1, hi-lo+1]."""
    return canonical(pi[lo - 1:hi])


def catalan(n: int) -> int:
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c


@dataclass(frozen=True)
class StaircaseDiagram:
    """Young diagram inside the staircase (n-1, ..., 1), drawn above the diagonal.

    Row r (from the top) collects the cells (i, n+1-r) for i = 1..parts[r-1];
    a cell (i, j) with i < j stands for the pair of vertices i, j.
    """

    parts: tuple[int, ...]
    n: int

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")
        for r, p in enumerate(parts, 1):
            if p < 0 or p > self.n - r:
                raise ValueError(f"{parts} does not fit in the staircase of size {self.n}")

    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, self.n + 1 - r)
                         for r, p in enumerate(self.parts, 1) for i in range(1, p + 1))

    @classmethod
    def from_cells(cls, cells: Iterable[tuple[int, int]], n: int) -> "StaircaseDiagram":
        rows = [0] * max(n - 1, 0)
        cells = set(cells)
        for (i, j) in cells:
            r = n + 1 - j
            rows[r - 1] = max(rows[r - 1], i)
        diagram = cls(tuple(rows), n)
        if diagram.cells() != cells:
            raise ValueError("cell set is not a Young diagram")
        return diagram

    def corners(self) -> list[tuple[int, int]]:
        cs = self.cells()
        return sorted((i, j) for (i, j) in cs
                      if (i + 1, j) not in cs and (i, j - 1) not in cs)

    def contains(self, other: "StaircaseDiagram") -> bool:
        return self.n == other.n and other.cells() <= self.cells()

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + f")@{self.n}"

    @classmethod
    def parse(cls, text: str) -> "StaircaseDiagram":
        shape, _, n = text.strip().partition("@")
        inner = shape.strip().strip("()")
        parts = tuple(int(x) for x in inner.split(",")) if inner else ()
        return cls(parts, int(n))

    def to_json(self) -> dict:
        return {"n": self.n, "parts": list(self.parts)}


def eta(pi: Sequence[int]) -> StaircaseDiagram:
    """Diagram whose corners are the arcs of a nonnesting partition."""
    if not is_nonnesting(pi):
        raise NestingError(f"{word_str(pi)} is nesting")
    n = len(pi)
    cells = {(a, b) for (i, j) in arcs(pi) for a in range(1, i + 1) for b in range(j, n + 1)}
    return StaircaseDiagram.from_cells(cells, n)


def eta_inverse(diagram: StaircaseDiagram) -> Word:
    n = diagram.n
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, j) in diagram.corners():
        parent[find(j)] = find(i)
    return canonical([find(x) for x in range(1, n + 1)])


def nn_leq(smaller: Sequence[int], larger: Sequence[int]) -> bool:
    """Order on nonnesting partitions induced by inclusion of diagrams."""
    if len(smaller) != len(larger):
        raise ValueError("partitions of different sizes")
    return eta(larger).contains(eta(smaller))
