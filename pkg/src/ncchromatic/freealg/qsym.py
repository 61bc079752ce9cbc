"""QSym on the M and F bases, and Sym on the S and Lambda bases."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from ..coeffring import ONE
from ..words import composition_refinements, compositions
from .linear import LinearCombination, element, register_product
from .wqsym import quasi_shuffles

__all__ = [
    "QM", "QF", "S", "Lam", "qsym_m_mul", "f_to_m", "m_to_f",
    "qsym_f_from_m", "qsym_m_from_f", "sym_s_mul", "integer_matrices", "sym_internal",
    "rearrangement_invariant",
]


def QM(I, coeff=1) -> LinearCombination:
    return element("QSym.M", I, coeff)


def QF(I, coeff=1) -> LinearCombination:
    return element("QSym.F", I, coeff)


def S(I, coeff=1) -> LinearCombination:
    return element("Sym.S", I, coeff)


def Lam(I, coeff=1) -> LinearCombination:
    return element("Sym.Lambda", I, coeff)


@lru_cache(maxsize=65536)
def _quasi_shuffle(I: tuple[int, ...], J: tuple[int, ...]) -> dict:
    out: dict = {}
    for f, g in quasi_shuffles(len(I), len(J)):
        k = max(f + g, default=0)
        parts = [0] * k
        for pos, a in zip(f, I):
            parts[pos - 1] += a
        for pos, b in zip(g, J):
            parts[pos - 1] += b
        key = tuple(parts)
        out[key] = out.get(key, 0) + 1
    return out


def qsym_m_mul(I: Sequence[int], J: Sequence[int]) -> LinearCombination:
    """Quasi-shuffle product of monomial quasi-symmetric functions."""
    return LinearCombination("QSym.M", _quasi_shuffle(tuple(I), tuple(J)))


register_product("QSym.M", qsym_m_mul)


def f_to_m(x: LinearCombination) -> LinearCombination:
    """F_I = sum of M_J over compositions J finer than I."""
    return x.apply(lambda I: LinearCombination("QSym.M", {J: ONE for J in composition_refinements(I)}),
                   "QSym.M")


def m_to_f(x: LinearCombination) -> LinearCombination:
    def one_key(I):
        return LinearCombination("QSym.F", {J: ONE if (len(J) - len(I)) % 2 == 0 else -ONE
                                            for J in composition_refinements(I)})
    return x.apply(one_key, "QSym.F")


qsym_f_from_m = m_to_f
qsym_m_from_f = f_to_m


def _f_mul(I, J):
    return m_to_f(f_to_m(QF(I)) * f_to_m(QF(J)))


register_product("QSym.F", _f_mul)


def sym_s_mul(I: Sequence[int], J: Sequence[int]) -> LinearCombination:
    return S(tuple(I) + tuple(J))


register_product("Sym.S", sym_s_mul)
register_product("Sym.Lambda", lambda I, J: Lam(tuple(I) + tuple(J)))


def integer_matrices(rows: Sequence[int], cols: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """Nonnegative integer matrices with the given row and column sums."""
    rows, cols = tuple(rows), tuple(cols)
    if sum(rows) != sum(cols):
        return []
    out = []

    def rec(r, remaining, acc):
        if r == len(rows):
            if not any(remaining):
                out.append(tuple(acc))
            return

        def fill(c, left, row):
            if c == len(cols) - 1:
                if left <= remaining[c]:
                    yield row + [left]
                return
            for x in range(min(left, remaining[c]), -1, -1):
                yield from fill(c + 1, left - x, row + [x])

        for row in fill(0, rows[r], []):
            rec(r + 1, [a - b for a, b in zip(remaining, row)], acc + [tuple(row)])

    if not cols:
        return [tuple(() for _ in rows)] if not any(rows) else []
    rec(0, list(cols), [])
    return out


def sym_internal(I: Sequence[int], J: Sequence[int]) -> LinearCombination:
    """S^I * S^J: one S^M per integer matrix with row sums I and column sums J,
    M read row by row with zero entries dropped.
    """
    if sum(I) != sum(J):
        raise ValueError("internal product of elements of different degrees")
    acc: dict = {}
    for mat in integer_matrices(I, J):
        key = tuple(x for row in mat for x in row if x)
        acc[key] = acc.get(key, 0) + 1
    return LinearCombination("Sym.S", acc)


def rearrangement_invariant(x: LinearCombination) -> bool:
    """True when M-coefficients agree on compositions with the same parts."""
    if x.tag != "QSym.M":
        raise TypeError("expects a QSym.M element")
    seen: dict = {}
    for n in x.degrees():
        for I in compositions(n):
            lam = tuple(sorted(I, reverse=True))
            c = x.coefficient(I)
            if seen.setdefault(lam, c) != c:
                return False
    return True
