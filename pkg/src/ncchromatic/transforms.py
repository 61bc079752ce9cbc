"""Virtual alphabets and the alphabet transforms on QSym, Sym, WQSym and WQSym*.

A virtual alphabet T is an algebra morphism on QSym, given by its values
M_I(T) on monomial quasi-symmetric functions.  The transforms

    M_I(X) -> M_I(XT),   S^I(A) -> S^I(TA),   M_u(A) -> M_u(AT),   N_u -> N_u(TA)

only ever use products of these values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Sequence

from .coeffring import ONE, ZERO, RationalFunction, t
from .freealg.linear import LinearCombination, one
from .words import (biletter_pack, compositions, evaluation, maj, pack, packed_words,
                    refines)

__all__ = [
    "VirtualAlphabet", "ALPHABETS", "get_alphabet", "specialize_M",
    "cuts", "qsym_transform", "sym_transform", "transform_matrix", "invert_matrix", "inverse_alphabet",
    "split_words", "v_set", "split_product", "wqsym_transform", "wqsymdual_transform",
    "nonincreasing_words", "nondecreasing_words", "increasing_word", "sigma_series", "graded_series_inverse",
]


@dataclass(frozen=True)
class VirtualAlphabet:
    """Algebra morphism QSym -> Q(t) given on the monomial basis."""

    name: str
    value_on_M: Callable[[tuple[int, ...]], RationalFunction] = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_cache", {})

    def __call__(self, I: Sequence[int]) -> RationalFunction:
        I = tuple(I)
        cache = self._cache
        if I not in cache:
            cache[I] = ONE if not I else self.value_on_M(I)
        return cache[I]

    def __str__(self):
        return self.name


def _partial_sums(I):
    s, out = 0, []
    for a in I:
        s += a
        out.append(s)
    return out


def _one_over_one_minus_t(I):
    den = ONE
    for s in _partial_sums(I):
        den = den * (1 - t ** s)
    return t ** maj(I) / den


def _one_over_t_minus_one(I):
    den = ONE
    for s in _partial_sums(I):
        den = den * (t ** s - 1)
    return ONE / den


# The next two use the last part of I: with the first part they would not
# invert the 1/(1-t) and 1/(t-1) transforms beyond degree 2.

def _one_minus_t(I):
    n = sum(I)
    return (-1) ** (len(I) - 1) * (t ** (n - I[-1]) - t ** n)


def _t_minus_one(I):
    return (-1) ** (len(I) - 1) * (t ** I[-1] - 1)


def _unit(I):
    return ONE if len(I) == 1 else ZERO


ALPHABETS: dict[str, VirtualAlphabet] = {a.name: a for a in [
    VirtualAlphabet("1/(1-t)", _one_over_one_minus_t),
    VirtualAlphabet("1/(t-1)", _one_over_t_minus_one),
    VirtualAlphabet("1-t", _one_minus_t),
    VirtualAlphabet("t-1", _t_minus_one),
    VirtualAlphabet("1", _unit),
]}


def get_alphabet(T) -> VirtualAlphabet:
    if isinstance(T, VirtualAlphabet):
        return T
    key = str(T).replace(" ", "")
    try:
        return ALPHABETS[key]
    except KeyError:
        raise ValueError(f"unknown alphabet {T!r}; known: {', '.join(ALPHABETS)}") from None


def specialize_M(T, I: Sequence[int]) -> RationalFunction:
    return get_alphabet(T)(I)


@lru_cache(maxsize=None)
def cuts(length: int) -> tuple[tuple[int, ...], ...]:
    """Cut points (subsets of 1..length-1) as sorted tuples."""
    inner = range(1, length)
    return tuple(c for r in range(max(length, 1)) for c in combinations(inner, r))


def _segments(I: tuple[int, ...], cut: tuple[int, ...]) -> list[tuple[int, ...]]:
    if not I:
        return []
    bounds = (0,) + cut + (len(I),)
    return [I[a:b] for a, b in zip(bounds, bounds[1:])]


# QSym and Sym

def qsym_transform(x: LinearCombination, T) -> LinearCombination:
    """M_I(XT) = sum over cuts I = I_1...I_s of prod M_{I_k}(T) M_{(|I_1|,...,|I_s|)}."""
    T = get_alphabet(T)
    if x.tag != "QSym.M":
        raise TypeError("XT transform acts on QSym.M")
    acc: dict = {}
    for I, c in x.items():
        for cut in cuts(len(I)):
            segs = _segments(I, cut)
            coef = ONE
            for s in segs:
                coef = coef * T(s)
            if coef:
                J = tuple(sum(s) for s in segs)
                acc[J] = acc.get(J, ZERO) + c * coef
    return LinearCombination("QSym.M", acc)


def _s_n_transform(n: int, T: VirtualAlphabet) -> LinearCombination:
    return LinearCombination("Sym.S", {J: T(J) for J in compositions(n)})


def sym_transform(x: LinearCombination, T) -> LinearCombination:
    """S^I(TA) = prod_k S_{i_k}(TA), with S_n(TA) = sum_J M_J(T) S^J."""
    T = get_alphabet(T)
    if x.tag != "Sym.S":
        raise TypeError("TA transform acts on Sym.S")
    acc = LinearCombination("Sym.S")
    for I, c in x.items():
        term = one("Sym.S")
        for a in I:
            term = term * _s_n_transform(a, T)
        acc = acc + term.scale(c)
    return acc


def transform_matrix(n: int, T) -> dict[tuple, dict[tuple, RationalFunction]]:
    """Row I holds the M_J coefficients of M_I(XT), for I, J compositions of n."""
    return {I: qsym_transform(LinearCombination("QSym.M", {I: ONE}), T).terms() for I in compositions(n)}


def invert_matrix(rows: list[list[RationalFunction]]) -> list[list[RationalFunction]]:
    """Gauss-Jordan inverse of a square matrix over Q(t)."""
    size = len(rows)
    a = [list(r) + [ONE if i == j else ZERO for j in range(size)] for i, r in enumerate(rows)]
    for c in range(size):
        p = next((r for r in range(c, size) if a[r][c]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[p] = a[p], a[c]
        inv = ONE / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(size):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [r[size:] for r in a]


def inverse_alphabet(T, name: str | None = None) -> VirtualAlphabet:
    """The alphabet whose XT transform inverts that of T, degree by degree.

    M_I of the inverse is the M_(n) coefficient of the inverse transform
    applied to M_I, read off the inverted transform matrix.
    """
    T = get_alphabet(T)
    columns: dict[int, dict] = {}

    def value(I):
        n = sum(I)
        if n not in columns:
            comps = list(compositions(n))
            mat = transform_matrix(n, T)
            inv = invert_matrix([[mat[I2].get(J, ZERO) for J in comps] for I2 in comps])
            last = comps.index((n,))
            columns[n] = {I2: inv[i][last] for i, I2 in enumerate(comps)}
        return columns[n][tuple(I)]

    return VirtualAlphabet(name or f"inverse of {T.name}", value)


# WQSym and its dual

def split_words(u: Sequence[int], w: Sequence[int]) -> list[tuple[int, ...]]:
    """w^(i): the packed subword of w at the positions where u equals i."""
    if len(u) != len(w):
        raise ValueError("words of different lengths")
    return [pack(tuple(b for a, b in zip(u, w) if a == i)) for i in range(1, max(u, default=0) + 1)]


def v_set(u: Sequence[int], w: Sequence[int]) -> set[tuple[int, ...]]:
    """All packed v with pack of the biletter word (u over v) equal to w."""
    if len(u) != len(w):
        raise ValueError("words of different lengths")
    w = tuple(w)
    return {v for v in packed_words(len(u)) if biletter_pack(u, v) == w}


def split_product(u: Sequence[int], w: Sequence[int]) -> LinearCombination:
    """M_{w^(1)} ... M_{w^(r)} with letters moved back to the positions of u.

    The k-th letter of a word in the product goes to the k-th position of u
    in the order (value of u, position).  When w refines u this equals the
    sum of M_v over v_set(u, w); without the repositioning, the equality only
    holds for nondecreasing u.
    """
    if len(u) != len(w):
        raise ValueError("words of different lengths")
    order = sorted(range(len(u)), key=lambda i: (u[i], i))
    prod = LinearCombination("WQSym.M", {(): ONE})
    for piece in split_words(u, w):
        prod = prod * LinearCombination("WQSym.M", {piece: ONE})

    def place(x):
        v = [0] * len(u)
        for k, pos in enumerate(order):
            v[pos] = x[k]
        return tuple(v)
    return prod.relabel(place)


@lru_cache(maxsize=None)
def _merge_plan(ev: tuple[int, ...], cut: tuple[int, ...]):
    """Letter relabelling for a coarsening, and the evaluation segments."""
    if not ev:
        return {}, ()
    bounds = (0,) + cut + (len(ev),)
    relabel = {}
    for k, (a, b) in enumerate(zip(bounds, bounds[1:]), 1):
        for letter in range(a + 1, b + 1):
            relabel[letter] = k
    segs = tuple(ev[a:b] for a, b in zip(bounds, bounds[1:]))
    return relabel, segs


def wqsym_transform(x: LinearCombination, T) -> LinearCombination:
    """M_u(AT) = sum over coarsenings v of u of prod_k M_{I_k}(T) M_v, where
    I_k is the part of ev(u) merged into the letter k of v.

    Coefficients are first grouped by (v, segments) so that the alphabet
    values are multiplied once per group.
    """
    T = get_alphabet(T)
    if x.tag != "WQSym.M":
        raise TypeError("AT transform acts on WQSym.M")
    groups: dict = {}
    for u, c in x.items():
        ev = evaluation(u)
        for cut in cuts(len(ev)):
            relabel, segs = _merge_plan(ev, cut)
            v = tuple(relabel[a] for a in u)
            key = (v, segs)
            prev = groups.get(key)
            groups[key] = c if prev is None else prev + c
    seg_value: dict = {}
    acc: dict = {}
    for (v, segs), c in groups.items():
        coef = seg_value.get(segs)
        if coef is None:
            coef = ONE
            for s in segs:
                coef = coef * T(s)
            seg_value[segs] = coef
        if coef:
            acc[v] = acc.get(v, ZERO) + c * coef
    return LinearCombination("WQSym.M", acc)


def wqsymdual_transform(u, T) -> LinearCombination:
    """N_u(TA) = N_u * sigma_1(TA) = sum_w prod_i M_{w^(i)}(T) N_w.

    The sum runs over the w refining u, which are exactly those w for which
    some v has pack(u over v) = w.
    """
    T = get_alphabet(T)
    if isinstance(u, LinearCombination):
        if u.tag != "WQSymDual.N":
            raise TypeError("TA transform acts on WQSymDual.N")
        acc = LinearCombination("WQSymDual.N")
        for k, c in u.items():
            acc = acc + wqsymdual_transform(k, T).scale(c)
        return acc
    u = tuple(u)
    out = {}
    for w in packed_words(len(u)):
        if not refines(w, u):
            continue
        coef = ONE
        for piece in split_words(u, w):
            coef = coef * T(evaluation(piece))
        if coef:
            out[w] = coef
    return LinearCombination("WQSymDual.N", out)


# series

def nonincreasing_words(n: int) -> list[tuple[int, ...]]:
    return [u for u in packed_words(n) if all(a >= b for a, b in zip(u, u[1:]))]


def nondecreasing_words(n: int) -> list[tuple[int, ...]]:
    return [u for u in packed_words(n) if all(a <= b for a, b in zip(u, u[1:]))]


def increasing_word(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def sigma_series(kind: str, n: int) -> LinearCombination:
    """Degree-n component of sigma_1(A(t-1)) or of lambda_{-1}(A(t-1)).

    sigma_1(A) is the sum of M_u over nonincreasing u; lambda_{-1}(A) is the
    alternating sum of (-1)^n M_{12...n}.  Both are pushed through the
    (t-1) transform.
    """
    if n < 0:
        raise ValueError("negative degree")
    if kind == "sigma1_t_minus_1":
        base = LinearCombination("WQSym.M", {u: ONE for u in nonincreasing_words(n)})
    elif kind == "lambda_minus1_t_minus_1":
        base = LinearCombination("WQSym.M", {increasing_word(n): (-1) ** n})
    else:
        raise ValueError(f"unknown series {kind!r}")
    return wqsym_transform(base, "t-1")


def graded_series_inverse(components: Sequence[LinearCombination]) -> list[LinearCombination]:
    """Inverse of a graded series a_0 + a_1 + ... truncated at the same degree.

    b_0 = a_0^{-1} and b_n = -a_0^{-1} sum_{k=1..n} a_k b_{n-k}, products taken
    in the algebra of the components.
    """
    if not components:
        return []
    a0 = components[0]
    tag = a0.tag
    c0 = a0.coefficient(())
    if len(a0) != 1 or not c0:
        raise ZeroDivisionError("constant term of the series is not invertible")
    inv0 = ONE / c0
    out = [one(tag).scale(inv0)]
    for n in range(1, len(components)):
        s = LinearCombination(tag)
        for k in range(1, n + 1):
            s = s + components[k] * out[n - k]
        out.append(s.scale(-inv0))
    return out
