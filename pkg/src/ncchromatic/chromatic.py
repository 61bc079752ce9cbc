"""Chromatic quasi-symmetric functions and unicellular LLT polynomials of
graphs, in QSym and WQSym, together with their expansions on the Phi, PhiCheck,
nonnesting and fundamental bases and the Hopf algebra of graphs."""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterable, Mapping, Sequence

import flint

from .coeffring import ONE, ZERO, RationalFunction, as_rf, t
from .dyckgraph import (DyckGraph, Graph, asc, des_set_G, edgeless, enumerate_dyck, inv_G,
                        is_proper, min_G, min_G_prime, path, restrict, shifted_concat,
                        to_diagram)
from .freealg.linear import LinearCombination, Tensor
from .freealg.qsym import m_to_f, rearrangement_invariant
from .freealg.wqsym import (m_to_phi, m_to_phicheck, phi_to_m, phicheck_to_m, coproduct,
                            wqsym_to_qsym)
from .freealg.wsym import mt_to_m, wqsym_to_wsym
from .partitions import eta, nonnesting_partitions, set_partitions
from .transforms import (get_alphabet, graded_series_inverse, increasing_word, qsym_transform,
                         sigma_series, specialize_M, wqsym_transform)
from .words import compositions, conjugate, evaluation, from_descents, packed_words, permutations

__all__ = [
    "GraphCombination", "x_qsym", "x_wqsym", "llt_qsym", "llt_wqsym",
    "x_phi", "x_phicheck", "llt_phicheck", "x1_mt", "x1_mt_proper", "sw_f_expansion",
    "gp_product", "gp_coproduct", "x_of_tensor", "rank_at_t1",
    "main_identity_check", "x2llt_check", "specialize", "dyck_specialization_check",
    "hopf_mul_check", "hopf_comul_check", "cocommutative_check",
    "phi_check", "phicheck_check", "llt_phicheck_check", "mt_check", "sw_check",
    "symmetry_check", "lambda_to_wqsym", "path_llt", "smirnov_check", "sigma_lambda_check",
    "NotDyck",
]


class NotDyck(ValueError):
    """A Dyck-only construction was given a graph that is not Dyck."""


def _dyck(G: Graph) -> DyckGraph:
    if isinstance(G, DyckGraph):
        return G
    if not G.is_dyck():
        raise NotDyck(f"{G} is not a Dyck graph")
    return G.as_dyck()


# graph algebra

class GraphCombination:
    """Finite linear combination of graphs, or of r-tuples of graphs (tensors)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict = {}
        for k, c in items:
            c = out.get(k, ZERO) + as_rf(c)
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        self._terms = out

    def items(self):
        return sorted(self._terms.items(), key=lambda kc: _key_order(kc[0]))

    def coefficient(self, key) -> RationalFunction:
        return self._terms.get(key, ZERO)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other: "GraphCombination") -> "GraphCombination":
        return GraphCombination(list(self._terms.items()) + list(other._terms.items()))

    def scale(self, c) -> "GraphCombination":
        c = as_rf(c)
        return GraphCombination({k: c * v for k, v in self._terms.items()})

    def evaluate_t(self, value) -> "GraphCombination":
        from .coeffring import evaluate
        return GraphCombination({k: evaluate(c, value) for k, c in self._terms.items()})

    def swap(self) -> "GraphCombination":
        """Reverse the tensor factors of every term."""
        return GraphCombination({tuple(reversed(k)): c for k, c in self._terms.items()})

    def __eq__(self, other):
        return isinstance(other, GraphCombination) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            label = " ⊗ ".join(map(str, k)) if isinstance(k, tuple) else str(k)
            parts.append(label if c == ONE else f"({c.to_text(compact=True)})*{label}")
        return " + ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"GraphCombination({self.to_text()})"


def _key_order(k):
    gs = k if isinstance(k, tuple) else (k,)
    return tuple((g.n, sorted(g.edges)) for g in gs)


def gp_product(G: Graph, H: Graph) -> Graph:
    """G . H: disjoint union with H shifted past G."""
    return shifted_concat(G, H)


def gp_coproduct(G: Graph, r: int = 2) -> GraphCombination:
    """Sum over w in [r]^n of t^asc_G(w) times the tensor of the restrictions
    of G to the classes w^{-1}(1), ..., w^{-1}(r)."""
    if r < 1:
        raise ValueError("r must be at least 1")
    acc: dict = {}
    for w in _cartesian(range(1, r + 1), repeat=G.n):
        key = tuple(restrict(G, [i + 1 for i, a in enumerate(w) if a == k]) for k in range(1, r + 1))
        acc[key] = acc.get(key, ZERO) + t ** asc(G, w)
    return GraphCombination(acc)


# expansions in the monomial bases

def x_wqsym(G: Graph) -> LinearCombination:
    """Sum over proper packed colorings c of t^asc_G(c) M_c."""
    return LinearCombination("WQSym.M", {c: t ** asc(G, c) for c in packed_words(G.n) if is_proper(G, c)})


def llt_wqsym(G: Graph) -> LinearCombination:
    """Sum over all packed words u of t^asc_G(u) M_u."""
    return LinearCombination("WQSym.M", {u: t ** asc(G, u) for u in packed_words(G.n)})


def _collect_evaluations(pairs) -> LinearCombination:
    acc: dict = {}
    for u, c in pairs:
        I = evaluation(u)
        acc[I] = acc.get(I, ZERO) + c
    return LinearCombination("QSym.M", acc)


def x_qsym(G: Graph) -> LinearCombination:
    """Commutative image: t^asc_G(c) M_ev(c) over proper packed colorings."""
    return _collect_evaluations((c, t ** asc(G, c)) for c in packed_words(G.n) if is_proper(G, c))


def llt_qsym(G: Graph) -> LinearCombination:
    return _collect_evaluations((u, t ** asc(G, u)) for u in packed_words(G.n))


def x_of_tensor(x: GraphCombination, fn=x_wqsym) -> Tensor:
    """Apply fn (x_wqsym by default) to both factors of a 2-fold tensor of graphs."""
    acc: dict = {}
    left = right = None
    for (a, b), c in x.items():
        xa, xb = fn(a), fn(b)
        left, right = xa.basis, xb.basis
        for u, d in xa.items():
            for v, e in xb.items():
                acc[(u, v)] = acc.get((u, v), ZERO) + c * d * e
    if left is None:
        return Tensor("WQSym.M", "WQSym.M")
    return Tensor(left, right, acc)


# positive expansions

def x_phi(G: Graph) -> LinearCombination:
    """Sum over permutations sigma of t^asc_G(sigma) Phi_{min_G(sigma)}."""
    G = _dyck(G)
    return LinearCombination("WQSym.Phi", {min_G(G, s): t ** asc(G, s) for s in permutations(G.n)})


def x_phicheck(G: Graph) -> LinearCombination:
    """Sum over permutations sigma of t^asc_G(sigma) PhiCheck_{min'_G(sigma)}."""
    G = _dyck(G)
    return LinearCombination("WQSym.PhiCheck",
                             {min_G_prime(G, s): t ** asc(G, s) for s in permutations(G.n)})


def llt_phicheck(G: Graph) -> LinearCombination:
    """Sum over sigma of t^asc_G(sigma) PhiCheck_{min'(sigma)} for the edgeless graph."""
    G = _dyck(G)
    E = edgeless(G.n)
    return LinearCombination("WQSym.PhiCheck",
                             {min_G_prime(E, s): t ** asc(G, s) for s in permutations(G.n)})


def x1_mt(G: Graph) -> LinearCombination:
    """X_G at t = 1 on the nonnesting basis: the pi' whose diagram lies inside
    the diagram of non-edges of G."""
    G = _dyck(G)
    D = to_diagram(G)
    return LinearCombination("WSym.mt", {p: ONE for p in nonnesting_partitions(G.n) if D.contains(eta(p))})


def x1_mt_proper(G: Graph) -> LinearCombination:
    """Same element, as the sum over nonnesting partitions that are proper colorings."""
    G = _dyck(G)
    return LinearCombination("WSym.mt", {p: ONE for p in nonnesting_partitions(G.n) if is_proper(G, p)})


def sw_f_expansion(G: Graph) -> LinearCombination:
    """Fundamental expansion: t^inv_G(sigma) F_I with I the conjugate of the
    composition of the non-edge descents of sigma."""
    G = _dyck(G)
    acc: dict = {}
    for s in permutations(G.n):
        I = conjugate(from_descents(des_set_G(G, s), G.n))
        acc[I] = acc.get(I, ZERO) + t ** inv_G(G, s)
    return LinearCombination("QSym.F", acc)


# rank of the t = 1 specializations

def rank_at_t1(n: int) -> int:
    """Rank of {X_G(1) : G Dyck on [n]} in the monomial basis of WSym."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    parts = set_partitions(n)
    rows = []
    for G in enumerate_dyck(n):
        x = wqsym_to_wsym(x_wqsym(G).evaluate_t(1))
        rows.append([_fmpq(x.coefficient(p)) for p in parts])
    if not rows:
        return 0
    return flint.fmpq_mat(len(rows), len(parts), [c for r in rows for c in r]).rank()


def _fmpq(c) -> flint.fmpq:
    f = c.constant_value() if c else Fraction(0)
    return flint.fmpq(f.numerator, f.denominator)


# identity checks

def main_identity_check(G: Graph) -> bool:
    """(t-1)^n X_G(A over 1/(t-1)) equals LLT_G(A)."""
    G = _dyck(G)
    lhs = wqsym_transform(x_wqsym(G), "1/(t-1)").scale((t - 1) ** G.n)
    return lhs == llt_wqsym(G)


def x2llt_check(G: Graph) -> bool:
    """X_G(X) = (t-1)^{-n} LLT_G((t-1)X) in QSym."""
    rhs = qsym_transform(llt_qsym(G), "t-1").scale(ONE / (t - 1) ** G.n)
    return x_qsym(G) == rhs


def specialize(x: LinearCombination, T) -> RationalFunction:
    """Value of a QSym.M element at a virtual alphabet."""
    if x.tag != "QSym.M":
        raise TypeError("specialization acts on QSym.M")
    T = get_alphabet(T)
    total = ZERO
    for I, c in x.items():
        total = total + c * specialize_M(T, I)
    return total


def dyck_specialization_check(G: Graph) -> bool:
    """X_G at the alphabet 1/(t-1) equals 1/(t-1)^n."""
    G = _dyck(G)
    return specialize(x_qsym(G), "1/(t-1)") == ONE / (t - 1) ** G.n


def hopf_mul_check(G: Graph, H: Graph) -> bool:
    return x_wqsym(gp_product(G, H)) == x_wqsym(G) * x_wqsym(H)


def hopf_comul_check(G: Graph) -> bool:
    """(X tensor X) of the graph coproduct equals the WQSym coproduct of X_G."""
    return x_of_tensor(gp_coproduct(G, 2)) == coproduct(x_wqsym(G))


def cocommutative_check(G: Graph, at_t1: bool = True) -> bool:
    d = gp_coproduct(G, 2)
    if at_t1:
        d = d.evaluate_t(1)
    return d == d.swap()


def phi_check(G: Graph) -> bool:
    return phi_to_m(x_phi(G)) == x_wqsym(G) and m_to_phi(x_wqsym(G)) == x_phi(G)


def phicheck_check(G: Graph) -> bool:
    return phicheck_to_m(x_phicheck(G)) == x_wqsym(G) and m_to_phicheck(x_wqsym(G)) == x_phicheck(G)


def llt_phicheck_check(G: Graph) -> bool:
    return phicheck_to_m(llt_phicheck(G)) == llt_wqsym(G)


def mt_check(G: Graph) -> bool:
    """Both nonnesting expansions agree and match X_G(1) pushed into WSym."""
    x = x1_mt(G)
    return x == x1_mt_proper(G) and mt_to_m(x) == wqsym_to_wsym(x_wqsym(G).evaluate_t(1))


def sw_check(G: Graph) -> bool:
    return sw_f_expansion(G) == m_to_f(wqsym_to_qsym(x_wqsym(G)))


def symmetry_check(G: Graph) -> bool:
    return rearrangement_invariant(x_qsym(G))


# path graphs

def lambda_to_wqsym(I: Sequence[int]) -> LinearCombination:
    """Image of Lambda^I, with Lambda_k sent to M_{12...k}."""
    acc = LinearCombination("WQSym.M", {(): ONE})
    for k in I:
        acc = acc * LinearCombination("WQSym.M", {increasing_word(k): ONE})
    return acc


def path_llt(n: int) -> bool:
    """LLT of the path is sum_I (t-1)^{n-l(I)} Lambda^I, and X of the path is
    sum_I Lambda^I(A(t-1)) / (t-1)^{l(I)}."""
    G = path(n)
    llt = LinearCombination("WQSym.M")
    x = LinearCombination("WQSym.M")
    for I in compositions(n):
        lam = lambda_to_wqsym(I)
        llt = llt + lam.scale((t - 1) ** (n - len(I)))
        x = x + wqsym_transform(lam, "t-1").scale(ONE / (t - 1) ** len(I))
    return llt == llt_wqsym(G) and x == x_wqsym(G)


def smirnov_check(n: int) -> bool:
    """At t = 1, through degree n, the sum of Smirnov words (X of the path)
    inverts the alternating sum of the constant words M_{1^k}."""
    constant = [LinearCombination("WQSym.M", {(1,) * k: (-1) ** k}) for k in range(n + 1)]
    inverse = graded_series_inverse(constant)
    return all(inverse[k] == x_wqsym(path(k)).evaluate_t(1) for k in range(n + 1))


def sigma_lambda_check(n: int) -> bool:
    """sigma_1(A(t-1)) lambda_{-1}(A(t-1)) = 1 through degree n."""
    sig = [sigma_series("sigma1_t_minus_1", k) for k in range(n + 1)]
    lam = [sigma_series("lambda_minus1_t_minus_1", k) for k in range(n + 1)]
    for d in range(n + 1):
        total = LinearCombination("WQSym.M")
        for k in range(d + 1):
            total = total + sig[k] * lam[d - k]
        if total != (LinearCombination("WQSym.M", {(): ONE}) if d == 0 else LinearCombination("WQSym.M")):
            return False
    return True
