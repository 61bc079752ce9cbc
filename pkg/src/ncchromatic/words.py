"""Packed words, permutations and compositions.

Words are plain tuples of positive integers.  :class:`PackedWord`,
:class:`Permutation` and :class:`Composition` are tuple subclasses that
validate their invariant on construction; every function here accepts any
integer sequence and internal code passes bare tuples around for speed.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

Word = tuple[int, ...]

__all__ = [
    "PackedWord", "Permutation", "Composition",
    "is_packed", "is_permutation",
    "pack", "standardize", "evaluation", "biletter_pack", "refines", "coarsenings",
    "strongly_finer", "dst_subset", "dst_word", "dst_words",
    "strong_refinement_set", "strong_coarsening_set",
    "advances", "bar", "right_action", "inverse", "compose",
    "packed_words", "permutations", "compositions",
    "descents", "from_descents", "maj", "conjugate", "is_finer_composition",
    "composition_coarsenings", "composition_refinements",
    "word_str", "parse_word", "composition_str", "parse_composition",
    "ordered_bell", "restricted_growth",
]


class PackedWord(tuple):
    """A word whose letters are exactly 1..m for some m >= 0."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        w = super().__new__(cls, (int(a) for a in letters))
        if not is_packed(w):
            raise ValueError(f"{tuple(w)} is not a packed word")
        return w

    def __repr__(self):
        return f"PackedWord({word_str(self)!r})"

    def __str__(self):
        return word_str(self)

    @property
    def max(self) -> int:
        return max(self, default=0)


class Permutation(PackedWord):
    """A packed word with distinct letters, read in one-line notation."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        w = tuple.__new__(cls, (int(a) for a in letters))
        if not is_permutation(w):
            raise ValueError(f"{tuple(w)} is not a permutation")
        return w

    def __repr__(self):
        return f"Permutation({word_str(self)!r})"


class Composition(tuple):
    """A finite sequence of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        c = super().__new__(cls, (int(p) for p in parts))
        if any(p < 1 for p in c):
            raise ValueError(f"{tuple(c)} has a nonpositive part")
        return c

    def __repr__(self):
        return f"Composition({tuple(self)})"

    def __str__(self):
        return composition_str(self)

    @property
    def weight(self) -> int:
        return sum(self)


def is_packed(w: Sequence[int]) -> bool:
    if not w:
        return True
    s = set(w)
    return min(s) == 1 and max(s) == len(s)


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def pack(w: Sequence) -> Word:
    """Relabel the letters of w order-preservingly onto 1..r.

    Letters only need to be mutually comparable, so this also packs
    biletter words given as tuples.
    """
    rank = {a: i for i, a in enumerate(sorted(set(w)), 1)}
    return tuple(rank[a] for a in w)


def standardize(w: Sequence) -> Word:
    """The permutation with the same inversions as w; ties ranked left to right."""
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    out = [0] * len(w)
    for r, i in enumerate(order, 1):
        out[i] = r
    return tuple(out)


def evaluation(w: Sequence[int]) -> tuple[int, ...]:
    """Multiplicities of the letters 1, 2, ..., max(w)."""
    if not w:
        return ()
    counts = [0] * max(w)
    for a in w:
        counts[a - 1] += 1
    return tuple(counts)


def _check_lengths(u, v):
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")


def biletter_pack(u: Sequence[int], v: Sequence[int]) -> Word:
    """pack of the biletter word (u over v), top letter compared first."""
    _check_lengths(u, v)
    return pack(list(zip(u, v)))


def refines(v: Sequence[int], u: Sequence[int]) -> bool:
    """True iff v is finer than u: each value-block of u is a union of
    consecutive value-blocks of v.
    """
    _check_lengths(u, v)
    n = len(u)
    for i in range(n):
        for j in range(n):
            if u[i] < u[j] and not v[i] < v[j]:
                return False
            if v[i] == v[j] and u[i] != u[j]:
                return False
    return True


def coarsenings(u: Sequence[int]) -> list[Word]:
    """All v with u finer than v, obtained by merging consecutive value-blocks."""
    m = max(u, default=0)
    if m == 0:
        return [()]
    out = []
    for cuts in itertools.product((0, 1), repeat=m - 1):
        relabel = [1]
        for c in cuts:
            relabel.append(relabel[-1] + c)
        out.append(tuple(relabel[a - 1] for a in u))
    return sorted(out)


def strongly_finer(v: Sequence[int], u: Sequence[int]) -> bool:
    """v >= u: same standardization and v refines u."""
    _check_lengths(u, v)
    return standardize(v) == standardize(u) and refines(v, u)


def advances(sigma: Sequence[int]) -> frozenset[int]:
    """Values i such that i+1 sits to the right of i."""
    pos = {a: i for i, a in enumerate(sigma)}
    return frozenset(i for i in range(1, len(sigma)) if pos[i + 1] > pos[i])


def dst_word(sigma: Sequence[int], subset: Iterable[int]) -> Word:
    """Packed word of standardization sigma attached to a subset of its advances.

    The letter of i+1 exceeds the letter of i exactly when i is not an
    advance or i belongs to ``subset``.
    """
    adv = advances(sigma)
    subset = frozenset(subset)
    if not subset <= adv:
        raise ValueError(f"{sorted(subset)} is not a subset of the advances {sorted(adv)}")
    letter = [0, 1]
    for i in range(1, len(sigma)):
        letter.append(letter[-1] + (0 if (i in adv and i not in subset) else 1))
    return tuple(letter[a] for a in sigma)


def dst_subset(u: Sequence[int]) -> frozenset[int]:
    """Inverse of :func:`dst_word` for the permutation std(u)."""
    sigma = standardize(u)
    pos = {a: i for i, a in enumerate(sigma)}
    return frozenset(i for i in advances(sigma) if u[pos[i + 1]] == u[pos[i]] + 1)


def dst_words(sigma: Sequence[int]) -> list[Word]:
    """All packed words whose standardization is sigma (a boolean lattice)."""
    adv = sorted(advances(sigma))
    out = []
    for r in range(len(adv) + 1):
        for sub in itertools.combinations(adv, r):
            out.append(dst_word(sigma, sub))
    return sorted(out)


def strong_refinement_set(u: Sequence[int]) -> list[Word]:
    """All v strongly finer than u."""
    sigma = standardize(u)
    base = dst_subset(u)
    rest = sorted(advances(sigma) - base)
    out = []
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            out.append(dst_word(sigma, base | set(extra)))
    return sorted(out)


def strong_coarsening_set(u: Sequence[int]) -> list[Word]:
    """All v such that u is strongly finer than v."""
    sigma = standardize(u)
    base = sorted(dst_subset(u))
    out = []
    for r in range(len(base) + 1):
        for sub in itertools.combinations(base, r):
            out.append(dst_word(sigma, sub))
    return sorted(out)


def bar(w: Sequence[int]) -> Word:
    """Mirror image."""
    return tuple(reversed(w))


def right_action(u: Sequence[int], sigma: Sequence[int]) -> Word:
    """u.sigma = u_{sigma(1)} u_{sigma(2)} ... u_{sigma(n)}."""
    _check_lengths(u, sigma)
    return tuple(u[s - 1] for s in sigma)


def inverse(sigma: Sequence[int]) -> Word:
    out = [0] * len(sigma)
    for i, s in enumerate(sigma, 1):
        out[s - 1] = i
    return tuple(out)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> Word:
    """(sigma o tau)(i) = sigma(tau(i))."""
    _check_lengths(sigma, tau)
    return tuple(sigma[x - 1] for x in tau)


@lru_cache(maxsize=None)
def packed_words(n: int) -> tuple[Word, ...]:
    """All packed words of length n in lexicographic order."""
    out = []
    for rgs in restricted_growth(n):
        m = max(rgs, default=0)
        for labels in itertools.permutations(range(1, m + 1)):
            out.append(tuple(labels[a - 1] for a in rgs))
    return tuple(sorted(out))


def restricted_growth(n: int):
    """Words whose letters first appear in the order 1, 2, 3, ... (set partitions of [n])."""
    if n == 0:
        yield ()
        return
    w = [1]

    def rec(m: int):
        if len(w) == n:
            yield tuple(w)
            return
        for a in range(1, m + 2):
            w.append(a)
            yield from rec(max(m, a))
            w.pop()

    yield from rec(1)


def ordered_bell(n: int) -> int:
    return len(packed_words(n))


@lru_cache(maxsize=None)
def permutations(n: int) -> tuple[Word, ...]:
    return tuple(itertools.permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[tuple[int, ...], ...]:
    """All compositions of n, ordered by descent sets read as binary strings."""
    if n == 0:
        return ((),)
    out = []
    for cuts in itertools.product((0, 1), repeat=n - 1):
        out.append(from_descents([i + 1 for i, c in enumerate(cuts) if c], n))
    return tuple(sorted(out))


def descents(I: Sequence[int]) -> frozenset[int]:
    """Des(I): partial sums i_1, i_1+i_2, ... excluding the total."""
    out, s = [], 0
    for p in I[:-1]:
        s += p
        out.append(s)
    return frozenset(out)


def from_descents(des: Iterable[int], n: int) -> tuple[int, ...]:
    """The composition of n whose descent set is des."""
    if n == 0:
        return ()
    pts = [0] + sorted(set(des)) + [n]
    if pts[1] <= 0 or pts[-2] >= n:
        raise ValueError(f"descent set {sorted(set(des))} not inside [1, {n - 1}]")
    return tuple(b - a for a, b in zip(pts, pts[1:]))


def maj(I: Sequence[int]) -> int:
    return sum(descents(I))


def conjugate(I: Sequence[int]) -> tuple[int, ...]:
    """Conjugate composition: complement the descent set in [1, n-1], then mirror."""
    n = sum(I)
    if n == 0:
        return ()
    comp = set(range(1, n)) - descents(I)
    return from_descents({n - d for d in comp}, n)


def is_finer_composition(I: Sequence[int], J: Sequence[int]) -> bool:
    """I finer than J (Des(J) contained in Des(I)), same weight."""
    return sum(I) == sum(J) and descents(J) <= descents(I)


def composition_coarsenings(I: Sequence[int]) -> list[tuple[int, ...]]:
    """All J with I finer than J, by merging consecutive parts."""
    n = sum(I)
    des = sorted(descents(I))
    out = []
    for r in range(len(des) + 1):
        for sub in itertools.combinations(des, r):
            out.append(from_descents(sub, n))
    return sorted(out)


def composition_refinements(I: Sequence[int]) -> list[tuple[int, ...]]:
    n = sum(I)
    return [J for J in compositions(n) if is_finer_composition(J, I)]


def word_str(w: Sequence[int]) -> str:
    """Digit string when every letter is <= 9, otherwise comma-separated."""
    if any(a > 9 for a in w):
        return ",".join(str(a) for a in w)
    return "".join(str(a) for a in w)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "()", "[]"):
        return ()
    if "," in text:
        return tuple(int(x) for x in text.strip("()[]").split(","))
    return tuple(int(ch) for ch in text)


def composition_str(I: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in I) + ")"


def parse_composition(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    if "," in text:
        parts = tuple(int(x) for x in text.split(","))
    else:
        parts = tuple(int(ch) for ch in text)
    Composition(parts)
    return parts
