"""The parts of FQSym used here: G and F bases, inclusion into WQSym,
projection from WQSym*, and the internal product."""

from __future__ import annotations

from typing import Sequence

from ..coeffring import ONE, ZERO
from ..words import compose, descents, dst_words, inverse, permutations, standardize
from .linear import LinearCombination, element

__all__ = [
    "G", "F", "iota", "iota_star", "fqsym_internal", "internal", "f_to_g", "g_to_f",
    "sym_to_fqsym", "permutation_descents",
]


def G(sigma, coeff=1) -> LinearCombination:
    return element("FQSym.G", sigma, coeff)


def F(sigma, coeff=1) -> LinearCombination:
    return element("FQSym.F", sigma, coeff)


def f_to_g(x: LinearCombination) -> LinearCombination:
    """F_sigma is identified with G_{sigma^-1}."""
    return x.relabel(inverse, "FQSym.G")


def g_to_f(x: LinearCombination) -> LinearCombination:
    return x.relabel(inverse, "FQSym.F")


def iota(x) -> LinearCombination:
    """Inclusion FQSym -> WQSym: G_sigma is the sum of M_u over std(u) = sigma."""
    if not isinstance(x, LinearCombination):
        x = G(x)
    if x.tag == "FQSym.F":
        x = f_to_g(x)
    if x.tag != "FQSym.G":
        raise TypeError("iota expects an FQSym element or a permutation")
    return x.apply(lambda s: LinearCombination("WQSym.M", {u: ONE for u in dst_words(s)}), "WQSym.M")


def iota_star(x) -> LinearCombination:
    """Projection WQSym* -> FQSym: N_u maps to F_{std(u)}."""
    if not isinstance(x, LinearCombination):
        x = element("WQSymDual.N", x)
    if x.tag != "WQSymDual.N":
        raise TypeError("iota_star expects a WQSymDual.N element")
    return x.relabel(standardize, "FQSym.F")


def fqsym_internal(sigma: Sequence[int], tau: Sequence[int], basis: str = "FQSym.F") -> LinearCombination:
    """F_s * F_t = F_{s o t}; on the G basis G_s * G_t = G_{t o s}."""
    if len(sigma) != len(tau):
        raise ValueError("internal product of permutations of different sizes")
    if basis == "FQSym.F":
        return F(compose(sigma, tau))
    if basis == "FQSym.G":
        return G(compose(tau, sigma))
    raise ValueError(f"unknown FQSym basis {basis}")


def internal(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    if x.tag != y.tag or x.tag not in ("FQSym.F", "FQSym.G"):
        raise TypeError("internal product needs two elements of the same FQSym basis")
    acc: dict = {}
    for s, c in x.items():
        for u, d in y.items():
            k = compose(s, u) if x.tag == "FQSym.F" else compose(u, s)
            acc[k] = acc.get(k, ZERO) + c * d
    return LinearCombination(x.tag, acc)


def permutation_descents(sigma: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i])


def sym_to_fqsym(x) -> LinearCombination:
    """S^I is the sum of F_sigma over Des(sigma^-1) contained in Des(I)."""
    if not isinstance(x, LinearCombination):
        x = element("Sym.S", x)
    if x.tag != "Sym.S":
        raise TypeError("expects a Sym.S element or a composition")

    def one_key(I):
        D = descents(I)
        n = sum(I)
        return LinearCombination("FQSym.F", {s: ONE for s in permutations(n)
                                            if permutation_descents(inverse(s)) <= D})
    return x.apply(one_key, "FQSym.F")
