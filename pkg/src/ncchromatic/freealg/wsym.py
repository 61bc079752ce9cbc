"""WSym (symmetric functions in noncommuting variables) on the monomial
basis m and on the nonnesting basis mt."""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import permutations as _perms
from typing import Sequence

from ..coeffring import ONE
from ..partitions import blocks, canonical, denest, set_partitions
from .linear import LinearCombination, element, register_product

__all__ = [
    "m", "mt", "wsym_m_mul", "denesting_fibers", "mt_to_m", "m_to_mt",
    "wqsym_to_wsym", "wsym_to_wqsym", "OutsideSpan",
]


class OutsideSpan(ValueError):
    """The element is not in the span of the requested basis."""


def m(pi, coeff=1) -> LinearCombination:
    return element("WSym.m", pi, coeff)


def mt(pi, coeff=1) -> LinearCombination:
    return element("WSym.mt", pi, coeff)


def _matchings(a: int, b: int):
    """Partial injections from range(a) to range(b), as lists of pairs."""
    def rec(i, used, acc):
        if i == a:
            yield list(acc)
            return
        yield from rec(i + 1, used, acc)
        for j in range(b):
            if j not in used:
                acc.append((i, j))
                yield from rec(i + 1, used | {j}, acc)
                acc.pop()
    yield from rec(0, frozenset(), [])


@lru_cache(maxsize=65536)
def _m_mul(p: tuple, q: tuple) -> tuple:
    n1 = len(p)
    A = blocks(p)
    B = [[x + n1 for x in blk] for blk in blocks(q)]
    out = []
    for match in _matchings(len(A), len(B)):
        used_a = {i for i, _ in match}
        used_b = {j for _, j in match}
        parts = [A[i] + B[j] for i, j in match]
        parts += [A[i] for i in range(len(A)) if i not in used_a]
        parts += [B[j] for j in range(len(B)) if j not in used_b]
        w = [0] * (n1 + len(q))
        for k, blk in enumerate(parts, 1):
            for x in blk:
                w[x - 1] = k
        out.append(canonical(w))
    return tuple(out)


def wsym_m_mul(p: Sequence[int], q: Sequence[int]) -> LinearCombination:
    """m_p m_q: blocks of p, blocks of q shifted, or unions of one of each."""
    acc: dict = {}
    for w in _m_mul(tuple(p), tuple(q)):
        acc[w] = acc.get(w, 0) + 1
    return LinearCombination("WSym.m", acc)


register_product("WSym.m", wsym_m_mul)


@lru_cache(maxsize=None)
def denesting_fibers(n: int) -> dict:
    """Map each nonnesting partition of [n] to the partitions denesting to it."""
    out = defaultdict(list)
    for p in set_partitions(n):
        out[denest(p)].append(p)
    return dict(out)


def mt_to_m(x) -> LinearCombination:
    """mt_pi is the sum of m_p over the partitions p with dn(p) = pi."""
    if not isinstance(x, LinearCombination):
        x = mt(x)
    if x.tag != "WSym.mt":
        raise TypeError("expects a WSym.mt element")
    return x.apply(lambda pi: LinearCombination("WSym.m", {p: ONE for p in denesting_fibers(len(pi))[pi]}),
                   "WSym.m")


def m_to_mt(x: LinearCombination) -> LinearCombination:
    """Expand an m-element in mt; raises OutsideSpan when impossible.

    The denesting fibers partition all set partitions, so an element lies in
    the mt span exactly when its coefficients are constant on every fiber.
    """
    if x.tag != "WSym.m":
        raise TypeError("expects a WSym.m element")
    out = {}
    for n in x.degrees():
        for pi, fiber in denesting_fibers(n).items():
            c = x.coefficient(pi)
            if any(x.coefficient(p) != c for p in fiber):
                raise OutsideSpan(f"coefficients differ on the fiber of {pi}")
            if c:
                out[pi] = c
    return LinearCombination("WSym.mt", out)


def _mt_mul(p, q):
    return m_to_mt(mt_to_m(mt(p)) * mt_to_m(mt(q)))


register_product("WSym.mt", _mt_mul)


def wsym_to_wqsym(x: LinearCombination) -> LinearCombination:
    """m_pi is the sum of M_u over packed words with equal-letter pattern pi."""
    if x.tag == "WSym.mt":
        x = mt_to_m(x)
    if x.tag != "WSym.m":
        raise TypeError("expects a WSym element")

    def one_key(pi):
        k = max(pi, default=0)
        return LinearCombination("WQSym.M", {tuple(s[a - 1] for a in pi): ONE for s in _perms(range(1, k + 1))})
    return x.apply(one_key, "WQSym.M")


def wqsym_to_wsym(x: LinearCombination) -> LinearCombination:
    """Inverse of the inclusion; raises OutsideSpan if x is not in WSym."""
    if x.tag != "WQSym.M":
        raise TypeError("expects a WQSym.M element")
    coeff: dict = {}
    for u, c in x.items():
        pi = canonical(u)
        if coeff.setdefault(pi, c) != c:
            raise OutsideSpan(f"coefficients differ on the class of {pi}")
    result = LinearCombination("WSym.m", coeff)
    if wsym_to_wqsym(result) != x:
        raise OutsideSpan("element is not constant on equal-letter classes")
    return result
