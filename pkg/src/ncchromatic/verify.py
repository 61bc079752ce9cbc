"""Batch verification suites: each suite checks one identity for every
object of a given size and reports how many objects were checked."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Callable

from . import chromatic as ch
from .coeffring import ZERO, q_integer, t
from .dyckgraph import (code, decode, enumerate_dyck, insertion_increments, insertion_visit_order,
                        mahonian_check, restrict, st_G)
from .freealg import fqsym
from .freealg.fqsym import F, iota_star, sym_to_fqsym
from .freealg.qsym import sym_internal
from .freealg.wqsym import N, hatS, internal, n_right_action
from .freealg.wsym import OutsideSpan, m_to_mt, mt_to_m
from .partitions import catalan, nonnesting_partitions
from .words import compositions, packed_words, permutations, standardize

__all__ = ["SizeResult", "SUITES", "DEFAULT_MAX", "run_suite", "ResourceLimit"]


class ResourceLimit(RuntimeError):
    """A suite ran past its time budget."""


@dataclass
class SizeResult:
    identity: str
    n: int
    passed: bool
    checked: int
    note: str = ""

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        tail = f" ({self.note})" if self.note else ""
        return f"{self.identity} n={self.n}: {status}, {self.checked} checked{tail}"


def _graphs(n, check):
    graphs = enumerate_dyck(n)
    bad = [str(G) for G in graphs if not check(G)]
    return not bad, len(graphs), ("failed: " + ", ".join(bad[:5])) if bad else ""


def _hopf_mul(n):
    count, bad = 0, []
    for a in range(n + 1):
        for G in enumerate_dyck(a):
            for H in enumerate_dyck(n - a):
                count += 1
                if not ch.hopf_mul_check(G, H):
                    bad.append(f"{G}*{H}")
    return not bad, count, ", ".join(bad[:5])


def _insertion(n):
    """Increments of inserting n are 0..n-1, visited in the insertion visit order."""
    if n == 0:
        return True, 0, ""
    count, bad = 0, []
    for G in enumerate_dyck(n):
        H = restrict(G, range(1, n))
        for s in permutations(n - 1):
            count += 1
            inc = dict(insertion_increments(G, s))
            gen = sum((t ** (st_G(H, s) + d) for d in inc.values()), ZERO)
            if gen != q_integer(n) * t ** st_G(H, s) or [inc[p] for p in insertion_visit_order(G, s)] != list(range(n)):
                bad.append(f"{G},{s}")
    return not bad, count, ", ".join(bad[:5])


def _subdiagonal(n):
    return set(_cartesian(*[range(n - i + 1) for i in range(1, n + 1)]))


def _code(n):
    count, bad = 0, []
    target = _subdiagonal(n)
    for G in enumerate_dyck(n):
        seen = set()
        for s in permutations(n):
            count += 1
            v = tuple(code(G, s))
            seen.add(v)
            if decode(G, v) != tuple(s):
                bad.append(f"{G},{s}")
        if seen != target:
            bad.append(f"{G}: image")
    return not bad, count, ", ".join(bad[:5])


def _mt(n):
    ok, count, note = _graphs(n, ch.mt_check)
    nn = nonnesting_partitions(n)
    if len(nn) != catalan(n):
        return False, count, f"dimension {len(nn)}"
    for a in range(1, n):
        for p in nonnesting_partitions(a):
            for q in nonnesting_partitions(n - a):
                count += 1
                try:
                    m_to_mt(mt_to_m(p) * mt_to_m(q))
                except OutsideSpan:
                    return False, count, f"mt{p} * mt{q} leaves the span"
    return ok, count, note or f"dimension {len(nn)}"


def _rank(n):
    r = ch.rank_at_t1(n)
    return r == catalan(n), 1, f"rank {r}, Catalan {catalan(n)}"


def _lemma_perm(n):
    """N_{u.sigma} * S^I = (N_u * S^I) . sigma, every u, a few random sigma and I."""
    rng = random.Random(n)
    comps = compositions(n)
    perms = permutations(n)
    count, bad = 0, []
    for u in packed_words(n):
        for _ in range(3):
            s = rng.choice(perms)
            I = rng.choice(comps)
            count += 1
            lhs = internal(n_right_action(N(u), s), hatS(I))
            rhs = n_right_action(internal(N(u), hatS(I)), s)
            if lhs != rhs:
                bad.append(f"{u},{s},{I}")
    return not bad, count, ", ".join(bad[:5])


def _descent_algebra(n):
    count, bad = 0, []
    for I in compositions(n):
        SI = sym_to_fqsym(I)
        for v in packed_words(n):
            count += 1
            if iota_star(internal(hatS(I), N(v))) != fqsym.internal(SI, F(standardize(v))):
                bad.append(f"{I},{v}")
        for J in compositions(n):
            count += 1
            if sym_to_fqsym(sym_internal(I, J)) != iota_star(internal(hatS(I), hatS(J))):
                bad.append(f"{I}*{J}")
    return not bad, count, ", ".join(bad[:5])


def _phi(n):
    return _graphs(n, lambda G: ch.phi_check(G) and ch.phicheck_check(G) and ch.sw_check(G))


SUITES: dict[str, Callable[[int], tuple[bool, int, str]]] = {
    "main": lambda n: _graphs(n, ch.main_identity_check),
    "x2llt": lambda n: _graphs(n, ch.x2llt_check),
    "dyck-special": lambda n: _graphs(n, ch.dyck_specialization_check),
    "mahonian": lambda n: _graphs(n, mahonian_check),
    "insertion": _insertion,
    "code": _code,
    "hopf-mul": _hopf_mul,
    "hopf-comul": lambda n: _graphs(n, lambda G: ch.hopf_comul_check(G) and ch.cocommutative_check(G)),
    "phi": _phi,
    "phicheck-llt": lambda n: _graphs(n, ch.llt_phicheck_check),
    "mt": _mt,
    "rank": _rank,
    "path": lambda n: (ch.path_llt(n), 1, ""),
    "smirnov": lambda n: (ch.smirnov_check(n) and ch.sigma_lambda_check(n), 1, ""),
    "lemma-perm": _lemma_perm,
    "descent-algebra": _descent_algebra,
    "symmetry": lambda n: _graphs(n, ch.symmetry_check),
}

# largest size each suite runs by default
DEFAULT_MAX = {name: 6 for name in SUITES}
DEFAULT_MAX.update({"main": 5, "hopf-comul": 5, "phi": 5, "phicheck-llt": 5, "mt": 5,
                    "rank": 5, "smirnov": 5, "lemma-perm": 5, "descent-algebra": 5})


def run_suite(identity: str, n_max: int, n_min: int = 1, timeout: float | None = None,
              report: Callable[[SizeResult], None] | None = None) -> list[SizeResult]:
    """Run a suite for sizes n_min..n_max; raises ResourceLimit (carrying the
    partial results) once the time budget is exceeded."""
    if identity not in SUITES:
        raise KeyError(identity)
    start = time.monotonic()
    results = []
    for n in range(n_min, n_max + 1):
        if timeout is not None and time.monotonic() - start > timeout:
            err = ResourceLimit(f"time budget of {timeout}s exceeded before n={n}")
            err.results = results
            raise err
        passed, checked, note = SUITES[identity](n)
        res = SizeResult(identity, n, passed, checked, note)
        results.append(res)
        if report:
            report(res)
    return results
