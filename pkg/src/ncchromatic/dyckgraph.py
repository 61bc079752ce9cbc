"""Dyck (unit interval) graphs, colorings and permutation statistics.

A Dyck graph on [n] is stored by its Hessenberg vector h: the edges are the
pairs i < j <= h(i).  General labelled graphs (which show up when a Dyck
graph is restricted to a color class) use :class:`Graph`.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .partitions import StaircaseDiagram
from .words import Word, bar, inverse, packed_words, permutations, standardize, word_str

__all__ = [
    "Graph", "DyckGraph", "enumerate_dyck", "complete", "edgeless", "path",
    "to_diagram", "from_diagram", "parse_graph",
    "asc", "is_proper", "proper_packed_colorings",
    "inv_G", "des_set_G", "maj_G", "descent_bottoms", "st_G",
    "insertion_increments", "insertion_visit_order", "render_increments",
    "code", "decode", "st_profile",
    "min_G", "min_G_prime", "restrict", "mirror", "shifted_concat",
    "mahonian_check", "std_min_check",
]


class Graph:
    """Simple graph on [n]; edges are stored as pairs (i, j) with i < j."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        n = int(n)
        if n < 0:
            raise ValueError("negative vertex count")
        es = set()
        for e in edges:
            i, j = sorted(int(x) for x in e)
            if i == j or i < 1 or j > n:
                raise ValueError(f"invalid edge {tuple(e)} on {n} vertices")
            es.add((i, j))
        self.n = n
        self.edges = frozenset(es)
        self._adj = None

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self.edges

    def neighbours(self, i: int) -> frozenset[int]:
        if self._adj is None:
            adj = {v: set() for v in range(1, self.n + 1)}
            for i0, j0 in self.edges:
                adj[i0].add(j0)
                adj[j0].add(i0)
            self._adj = {v: frozenset(s) for v, s in adj.items()}
        return self._adj[i]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_dyck(self) -> bool:
        return all(self.has_edge(a, b)
                   for (i, j) in self.edges for a in range(i, j) for b in range(a + 1, j + 1))

    def as_dyck(self) -> "DyckGraph":
        if isinstance(self, DyckGraph):
            return self
        if not self.is_dyck():
            raise ValueError(f"{self} is not a Dyck graph")
        h = [i for i in range(1, self.n + 1)]
        for i, j in self.edges:
            h[i - 1] = max(h[i - 1], j)
        return DyckGraph(h)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph({self.n}, {self.sorted_edges()})"

    def __str__(self):
        es = ",".join(f"{i}-{j}" for i, j in self.sorted_edges())
        return f"G{self.n}:e={es}"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}


class DyckGraph(Graph):
    """Dyck graph given by a Hessenberg vector (h nondecreasing, h(i) >= i)."""

    __slots__ = ("hessenberg",)

    def __init__(self, hessenberg: Iterable[int]):
        h = tuple(int(x) for x in hessenberg)
        n = len(h)
        for i, x in enumerate(h, 1):
            if not i <= x <= n:
                raise ValueError(f"Hessenberg entry h({i}) = {x} out of range")
        if any(a > b for a, b in zip(h, h[1:])):
            raise ValueError(f"Hessenberg vector {h} is not nondecreasing")
        super().__init__(n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, h[i - 1] + 1)))
        self.hessenberg = h

    def __repr__(self):
        return f"DyckGraph({self.hessenberg})"

    def __str__(self):
        return f"D{self.n}:h=" + word_str(self.hessenberg)

    def to_json(self) -> dict:
        return {"n": self.n, "h": list(self.hessenberg)}


def complete(n: int) -> DyckGraph:
    return DyckGraph([n] * n)


def edgeless(n: int) -> DyckGraph:
    return DyckGraph(range(1, n + 1))


def path(n: int) -> DyckGraph:
    return DyckGraph([min(i + 1, n) for i in range(1, n + 1)])


@lru_cache(maxsize=None)
def _hessenberg_vectors(n: int) -> tuple[tuple[int, ...], ...]:
    out = []

    def rec(prefix, lo):
        i = len(prefix) + 1
        if i > n:
            out.append(tuple(prefix))
            return
        for x in range(max(lo, i), n + 1):
            rec(prefix + [x], x)

    rec([], 1)
    return tuple(out)


def enumerate_dyck(n: int) -> list[DyckGraph]:
    """All Dyck graphs on [n], in lexicographic order of Hessenberg vectors."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [DyckGraph(h) for h in _hessenberg_vectors(n)]


def to_diagram(G: Graph) -> StaircaseDiagram:
    """Diagram made of the non-edges (i < j) of a Dyck graph."""
    G = G.as_dyck()
    n = G.n
    non_edges = {(i, j) for i, j in combinations(range(1, n + 1), 2) if not G.has_edge(i, j)}
    return StaircaseDiagram.from_cells(non_edges, n)


def from_diagram(diagram: StaircaseDiagram) -> DyckGraph:
    n = diagram.n
    cells = diagram.cells()
    g = Graph(n, [(i, j) for i, j in combinations(range(1, n + 1), 2) if (i, j) not in cells])
    return g.as_dyck()


def _graph_from_obj(obj) -> Graph:
    if "h" in obj:
        g = DyckGraph(obj["h"])
        if "n" in obj and int(obj["n"]) != g.n:
            raise ValueError("n does not match the Hessenberg vector")
        return g
    if "edges" in obj:
        return _maybe_dyck(Graph(obj["n"], obj["edges"]))
    raise ValueError("graph JSON needs 'h' or 'edges'")


def _maybe_dyck(g: Graph) -> Graph:
    return g.as_dyck() if g.is_dyck() else g


def _digits_or_commas(s: str) -> list[int]:
    s = s.strip()
    if not s:
        return []
    if "," in s:
        return [int(x) for x in s.split(",")]
    return [int(c) for c in s]


def parse_graph(text: str) -> Graph:
    """Parse ``h:2,3,5,5,5``, ``D5:h=23555``, ``e:5;1-2,2-3``, ``G5:e=1-2`` or JSON."""
    s = text.strip()
    if s.startswith("{"):
        return _graph_from_obj(json.loads(s))
    m = re.fullmatch(r"(?:D(\d+):h=|h:)(.*)", s)
    if m:
        g = DyckGraph(_digits_or_commas(m.group(2)))
        if m.group(1) is not None and int(m.group(1)) != g.n:
            raise ValueError("vertex count does not match the Hessenberg vector")
        return g
    m = re.fullmatch(r"(?:e:(\d+);|G(\d+):e=)(.*)", s)
    if m:
        n = int(m.group(1) or m.group(2))
        body = m.group(3).strip()
        edges = [tuple(int(x) for x in part.split("-")) for part in body.split(",") if part.strip()]
        return _maybe_dyck(Graph(n, edges))
    raise ValueError(f"cannot parse graph {text!r}")


# colorings

def _check_len(G: Graph, w: Sequence[int]):
    if len(w) != G.n:
        raise ValueError(f"word of length {len(w)} for a graph on {G.n} vertices")


def asc(G: Graph, c: Sequence[int]) -> int:
    """Number of edges i < j with c_i < c_j."""
    _check_len(G, c)
    return sum(1 for i, j in G.edges if c[i - 1] < c[j - 1])


def is_proper(G: Graph, c: Sequence[int]) -> bool:
    _check_len(G, c)
    return all(c[i - 1] != c[j - 1] for i, j in G.edges)


def proper_packed_colorings(G: Graph) -> list[Word]:
    return [u for u in packed_words(G.n) if is_proper(G, u)]


# permutation statistics

def inv_G(G: Graph, sigma: Sequence[int]) -> int:
    """Edges (i < j) with j to the left of i in sigma."""
    _check_len(G, sigma)
    pos = {v: p for p, v in enumerate(sigma)}
    return sum(1 for i, j in G.edges if pos[i] > pos[j])


def des_set_G(G: Graph, sigma: Sequence[int]) -> frozenset[int]:
    _check_len(G, sigma)
    return frozenset(i for i in range(1, len(sigma))
                     if sigma[i - 1] > sigma[i] and not G.has_edge(sigma[i], sigma[i - 1]))


def maj_G(G: Graph, sigma: Sequence[int]) -> int:
    return sum(des_set_G(G, sigma))


def descent_bottoms(G: Graph, sigma: Sequence[int]) -> frozenset[int]:
    return frozenset(sigma[i] for i in des_set_G(G, sigma))


def st_G(G: Graph, sigma: Sequence[int]) -> int:
    return inv_G(G, sigma) + maj_G(G, sigma)


# insertion of the largest letter

def _check_insertion(G: Graph, sigma: Sequence[int]):
    if sorted(sigma) != list(range(1, G.n)):
        raise ValueError(f"{word_str(sigma)} is not a permutation of [{G.n - 1}]")


def insertion_increments(G: Graph, sigma: Sequence[int]) -> list[tuple[int, int]]:
    """(slot, st_G(tau) - st_H(sigma)) for every way of inserting n into sigma.

    Slot p < n-1 means n is placed just before sigma[p] (0-based); slot n-1
    is the end.  H is the restriction of G to [1, n-1].
    """
    _check_insertion(G, sigma)
    n = G.n
    H = restrict(G, range(1, n))
    base = st_G(H, sigma)
    out = []
    for p in range(n):
        tau = tuple(sigma[:p]) + (n,) + tuple(sigma[p:])
        out.append((p, st_G(G, tau) - base))
    return out


def insertion_visit_order(G: Graph, sigma: Sequence[int]) -> list[int]:
    """Slots visited so that the increments come out as 0, 1, ..., n-1.

    End first; then, right to left, the slots before letters adjacent to n
    or that are descent bottoms of sigma (for the graph restricted to
    [n-1]); then the remaining slots left to right.
    """
    _check_insertion(G, sigma)
    n = G.n
    H = restrict(G, range(1, n))
    bottoms = descent_bottoms(H, sigma)
    special = [p for p, k in enumerate(sigma) if G.has_edge(k, n) or k in bottoms]
    rest = [p for p in range(n - 1) if p not in special]
    return [n - 1] + special[::-1] + rest


_SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def render_increments(G: Graph, sigma: Sequence[int]) -> str:
    """Sigma with each slot's increment as a superscript, e.g. ``⁴5 ³2 ⁰``."""
    inc = dict(insertion_increments(G, sigma))
    parts = [str(inc[p]).translate(_SUP) + str(k) for p, k in enumerate(sigma)]
    parts.append(str(inc[len(sigma)]).translate(_SUP))
    return " ".join(parts)


# codes

def _restrict_values(sigma: Sequence[int], k: int) -> Word:
    return tuple(x for x in sigma if x <= k)


def st_profile(G: Graph, sigma: Sequence[int]) -> list[int]:
    """st of sigma restricted to [1, n-i], for i = 0 .. n-1."""
    _check_len(G, sigma)
    n = G.n
    return [st_G(restrict(G, range(1, k + 1)), _restrict_values(sigma, k)) for k in range(n, 0, -1)]


def code(G: Graph, sigma: Sequence[int]) -> list[int]:
    """Subdiagonal code: entry i (1-based) is the increment of st when the
    letter n-i+1 is inserted into sigma restricted to [1, n-i].
    """
    prof = st_profile(G, sigma) + [0]
    return [prof[i] - prof[i + 1] for i in range(G.n)]


def decode(G: Graph, v: Sequence[int]) -> Word:
    n = G.n
    if len(v) != n:
        raise ValueError(f"code of length {len(v)} for a graph on {n} vertices")
    for i, x in enumerate(v, 1):
        if not 0 <= x <= n - i:
            raise ValueError(f"code entry v_{i} = {x} is outside [0, {n - i}]")
    sigma: tuple[int, ...] = ()
    for k in range(1, n + 1):
        target = v[n - k]
        Gk = restrict(G, range(1, k + 1))
        for p, inc in insertion_increments(Gk, sigma):
            if inc == target:
                sigma = sigma[:p] + (k,) + sigma[p:]
                break
        else:
            raise ValueError(f"no insertion slot with increment {target}; graph is not Dyck")
    return sigma


# minimal words in the proper-coloring sublattice

def min_G(G: Graph, sigma: Sequence[int]) -> Word:
    """Smallest proper coloring u of G with std(u) = sigma (strong order)."""
    _check_len(G, sigma)
    pos = inverse(sigma)
    S = [i for i in range(2, G.n + 1)
         if pos[i - 2] < pos[i - 1] and not G.has_edge(pos[i - 2], pos[i - 1])]
    return tuple(s - sum(1 for i in S if i <= s) for s in sigma)


def min_G_prime(G: Graph, sigma: Sequence[int]) -> Word:
    return bar(min_G(mirror(G), bar(sigma)))


# graph operations

def restrict(G: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the given vertices, relabelled order-preservingly."""
    vs = sorted(set(int(v) for v in vertices))
    if vs and (vs[0] < 1 or vs[-1] > G.n):
        raise ValueError(f"vertices {vs} not in [1, {G.n}]")
    index = {v: k for k, v in enumerate(vs, 1)}
    if isinstance(G, DyckGraph):
        # an induced subgraph of a Dyck graph is Dyck after relabelling
        h = [max([index[i]] + [index[j] for j in vs if i < j <= G.hessenberg[i - 1]]) for i in vs]
        return DyckGraph(h)
    edges = [(index[i], index[j]) for i, j in G.edges if i in index and j in index]
    return Graph(len(vs), edges)


def mirror(G: Graph) -> Graph:
    """Relabel vertices by i -> n+1-i."""
    n = G.n
    g = Graph(n, [(n + 1 - j, n + 1 - i) for i, j in G.edges])
    return g.as_dyck() if isinstance(G, DyckGraph) else g


def shifted_concat(G: Graph, H: Graph) -> Graph:
    """Disjoint union with the vertices of H shifted past those of G."""
    if isinstance(G, DyckGraph) and isinstance(H, DyckGraph):
        return DyckGraph(G.hessenberg + tuple(x + G.n for x in H.hessenberg))
    return Graph(G.n + H.n, list(G.edges) + [(i + G.n, j + G.n) for i, j in H.edges])


def mahonian_check(G: Graph) -> bool:
    """Distribution of st_G over S_n equals that of inv."""
    from collections import Counter
    dist = Counter(st_G(G, s) for s in permutations(G.n))
    target = Counter(st_G(complete(G.n), s) for s in permutations(G.n))
    return dist == target


def std_min_check(G: Graph) -> bool:
    return all(standardize(min_G(G, s)) == tuple(s) for s in permutations(G.n))
