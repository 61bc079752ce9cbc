"""WQSym on the M, Phi and PhiCheck bases, and its graded dual on N."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from ..coeffring import ONE, ZERO, RationalFunction
from ..words import (Word, bar, biletter_pack, evaluation, pack, right_action,
                     strong_refinement_set)
from .linear import LinearCombination, Tensor, element, register_product

__all__ = [
    "M", "N", "wqsym_m_mul", "wqsym_m_coproduct", "coproduct",
    "phi_to_m", "m_to_phi", "phicheck_to_m", "m_to_phicheck",
    "phi_from_m", "m_from_phi", "phicheck_from_m", "m_from_phicheck",
    "wqsym_to_qsym", "pairing", "wqsymdual_internal", "internal", "hatS",
    "n_right_action", "words_with_evaluation", "quasi_shuffles",
]


def M(word, coeff=1) -> LinearCombination:
    return element("WQSym.M", word, coeff)


def N(word, coeff=1) -> LinearCombination:
    return element("WQSymDual.N", word, coeff)


@lru_cache(maxsize=None)
def quasi_shuffles(a: int, b: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Pairs (f, g) of increasing maps [a] -> [k], [b] -> [k] jointly onto [k]."""
    out = []

    def rec(i, j, f, g, k):
        if i == a and j == b:
            out.append((tuple(f), tuple(g)))
            return
        if i < a:
            rec(i + 1, j, f + [k + 1], g, k + 1)
        if j < b:
            rec(i, j + 1, f, g + [k + 1], k + 1)
        if i < a and j < b:
            rec(i + 1, j + 1, f + [k + 1], g + [k + 1], k + 1)

    rec(0, 0, [], [], 0)
    return tuple(out)


@lru_cache(maxsize=65536)
def _m_mul(u: Word, v: Word) -> tuple[Word, ...]:
    out = []
    for f, g in quasi_shuffles(max(u, default=0), max(v, default=0)):
        out.append(tuple(f[x - 1] for x in u) + tuple(g[x - 1] for x in v))
    return tuple(out)


def wqsym_m_mul(u: Sequence[int], v: Sequence[int]) -> LinearCombination:
    """M_u M_v: all packed words w'w'' with pack(w') = u and pack(w'') = v."""
    return LinearCombination("WQSym.M", {w: ONE for w in _m_mul(tuple(u), tuple(v))})


register_product("WQSym.M", wqsym_m_mul)


def wqsym_m_coproduct(u: Sequence[int]) -> Tensor:
    """Split the values of u at every k: letters <= k left, letters > k right."""
    u = tuple(u)
    terms = {}
    for k in range(max(u, default=0) + 1):
        left = tuple(x for x in u if x <= k)
        right = pack(tuple(x for x in u if x > k))
        terms[(left, right)] = ONE
    return Tensor("WQSym.M", "WQSym.M", terms)


def coproduct(x: LinearCombination) -> Tensor:
    if x.tag != "WQSym.M":
        x = _to_m(x)
    acc: dict = {}
    for u, c in x.items():
        for k in range(max(u, default=0) + 1):
            key = (tuple(a for a in u if a <= k), pack(tuple(a for a in u if a > k)))
            acc[key] = acc.get(key, ZERO) + c
    return Tensor("WQSym.M", "WQSym.M", acc)


# Phi and PhiCheck

def _phi_key_to_m(u: Word) -> LinearCombination:
    return LinearCombination("WQSym.M", {v: ONE for v in strong_refinement_set(u)})


def _m_key_to_phi(u: Word) -> LinearCombination:
    mu = max(u, default=0)
    return LinearCombination("WQSym.Phi", {v: ONE if (max(v, default=0) - mu) % 2 == 0 else -ONE
                                           for v in strong_refinement_set(u)})


def phi_to_m(x: LinearCombination) -> LinearCombination:
    return x.apply(_phi_key_to_m, "WQSym.M")


def m_to_phi(x: LinearCombination) -> LinearCombination:
    return x.apply(_m_key_to_phi, "WQSym.Phi")


def phicheck_to_m(x: LinearCombination) -> LinearCombination:
    """PhiCheck_u = sum of M_{bar v} over v strongly finer than bar u."""
    return x.apply(lambda u: _phi_key_to_m(bar(u)).relabel(bar), "WQSym.M")


def m_to_phicheck(x: LinearCombination) -> LinearCombination:
    return x.apply(lambda u: _m_key_to_phi(bar(u)).relabel(bar, "WQSym.PhiCheck"), "WQSym.PhiCheck")


phi_from_m = m_to_phi
m_from_phi = phi_to_m
phicheck_from_m = m_to_phicheck
m_from_phicheck = phicheck_to_m


def _to_m(x: LinearCombination) -> LinearCombination:
    if x.tag == "WQSym.M":
        return x
    if x.tag == "WQSym.Phi":
        return phi_to_m(x)
    if x.tag == "WQSym.PhiCheck":
        return phicheck_to_m(x)
    raise TypeError(f"{x.tag} is not a WQSym basis")


def _via_m(to_basis):
    def mul(u, v):
        a = _to_m(element(to_basis, u))
        b = _to_m(element(to_basis, v))
        prod = a * b
        return m_to_phi(prod) if to_basis == "WQSym.Phi" else m_to_phicheck(prod)
    return mul


register_product("WQSym.Phi", _via_m("WQSym.Phi"))
register_product("WQSym.PhiCheck", _via_m("WQSym.PhiCheck"))


def to_m(x: LinearCombination) -> LinearCombination:
    return _to_m(x)


def wqsym_to_qsym(x: LinearCombination) -> LinearCombination:
    """Commutative image M_u -> M_{ev(u)}."""
    return _to_m(x).relabel(evaluation, "QSym.M")


# duality

def pairing(x: LinearCombination, y: LinearCombination) -> RationalFunction:
    """<N_u, M_v> = 1 if u = v, else 0."""
    if x.tag != "WQSymDual.N":
        raise TypeError("left argument must be in WQSymDual.N")
    y = _to_m(y)
    total = ZERO
    for k, c in x.items():
        d = y.coefficient(k)
        if d:
            total = total + c * d
    return total


def wqsymdual_internal(u: Sequence[int], v: Sequence[int]) -> LinearCombination:
    if len(u) != len(v):
        raise ValueError("internal product needs words of equal length")
    return N(biletter_pack(u, v))


def internal(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    """Bilinear internal product on WQSymDual.N, degree by degree."""
    if x.tag != "WQSymDual.N" or y.tag != "WQSymDual.N":
        raise TypeError("internal product is defined on WQSymDual.N")
    acc: dict = {}
    for u, c in x.items():
        for v, d in y.items():
            if len(u) != len(v):
                raise ValueError("internal product of elements of different degrees")
            w = biletter_pack(u, v)
            acc[w] = acc.get(w, ZERO) + c * d
    return LinearCombination("WQSymDual.N", acc)


@lru_cache(maxsize=None)
def words_with_evaluation(I: tuple[int, ...]) -> tuple[Word, ...]:
    """All packed words whose evaluation is I, in lexicographic order."""
    counts = list(I)
    n = sum(counts)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for a, c in enumerate(counts):
            if c:
                counts[a] -= 1
                prefix.append(a + 1)
                rec(prefix)
                prefix.pop()
                counts[a] += 1

    rec([])
    return tuple(out)


def hatS(I: Sequence[int]) -> LinearCombination:
    """Image of the complete function S^I: the sum of N_u over ev(u) = I."""
    return LinearCombination("WQSymDual.N", {u: ONE for u in words_with_evaluation(tuple(I))})


def n_right_action(x: LinearCombination, sigma: Sequence[int]) -> LinearCombination:
    if x.tag != "WQSymDual.N":
        raise TypeError("right action is defined on WQSymDual.N")
    return x.relabel(lambda u: right_action(u, sigma))
