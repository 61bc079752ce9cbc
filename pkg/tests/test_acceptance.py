"""The thirteen acceptance criteria, each checked by exact equality.

Every test prints one PASS/FAIL line (visible with or without -s), and the
module can also be run directly: python3 tests/test_acceptance.py
"""

import time

import pytest

from ncchromatic.chromatic import (GraphCombination, gp_coproduct, llt_phicheck, main_identity_check, x1_mt,
                                   x_phi, x_phicheck, x_wqsym)
from ncchromatic.coeffring import ONE, t
from ncchromatic.dyckgraph import DyckGraph, enumerate_dyck, min_G, min_G_prime, render_increments
from ncchromatic.freealg import LinearCombination, M, parse_element, wqsym_to_qsym
from ncchromatic.transforms import (inverse_alphabet, qsym_transform, specialize_M, split_product,
                                    v_set, wqsym_transform)
from ncchromatic.verify import run_suite
from ncchromatic.words import compositions, packed_words, refines

from test_chromatic import G11, G21, G22, G32, LLT_PHICHECK, X1_MT, X_M, X_PHI, X_PHICHECK
from test_dyckgraph import COLUMNS, MIN_PRIME_TABLE, MIN_TABLE, SMALL, w


def report(number, title, ok, detail="", capsys=None):
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title}" + (f" [{detail}]" if detail else "")
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok


def suite(identity, n_max):
    results = run_suite(identity, n_max)
    return all(r.passed for r in results), sum(r.checked for r in results)


def criterion_1():
    ok5, count5 = suite("main", 5)
    start = time.monotonic()
    graphs6 = enumerate_dyck(6)
    ok6 = all(main_identity_check(G) for G in graphs6)
    elapsed = time.monotonic() - start
    ok = ok5 and ok6 and len(graphs6) == 132 and elapsed < 300
    return ok, f"{count5} graphs n<=5; n=6: {len(graphs6)} graphs in {elapsed:.0f}s"


def criterion_2():
    ok, count = suite("x2llt", 6)
    return ok, f"{count} graphs n<=6"


def criterion_3():
    ok, count = suite("dyck-special", 6)
    return ok, f"{count} graphs n<=6"


def criterion_4():
    start = time.monotonic()
    results = run_suite("mahonian", 6)
    elapsed = time.monotonic() - start
    ok = all(r.passed for r in results) and results[-1].checked == 132 and elapsed < 60
    return ok, f"132 graphs x 720 permutations at n=6 in {elapsed:.1f}s"


def criterion_5():
    ok, count = suite("insertion", 6)
    example = render_increments(DyckGraph((2, 4, 4, 6, 6, 6)), (5, 2, 3, 1, 4))
    return ok and example == "⁴5 ³2 ⁵3 ²1 ¹4 ⁰", f"{count} (graph, permutation) pairs; example {example}"


def criterion_6():
    ok, count = suite("code", 6)
    return ok, f"{count} (graph, permutation) pairs n<=6"


def criterion_7():
    ok_mul, c_mul = suite("hopf-mul", 6)
    ok_comul, c_comul = suite("hopf-comul", 5)
    E = DyckGraph(())
    d = gp_coproduct(G32, 2)
    side = GraphCombination({(G11, G21): 1 + t, (G11, G22): ONE})
    ok_display = d == GraphCombination({(G32, E): ONE, (E, G32): ONE}) + side + side.swap()
    return ok_mul and ok_comul and ok_display, f"{c_mul} pairs, {c_comul} coproducts, display {ok_display}"


def criterion_8():
    ok_phi, c1 = suite("phi", 5)
    ok_llt, c2 = suite("phicheck-llt", 5)
    displays = [x_phi(G) == parse_element(s, "WQSym.Phi") for G, s in X_PHI.items() if G.n == 3]
    displays += [x_phicheck(G) == parse_element(s, "WQSym.PhiCheck") for G, s in X_PHICHECK.items()]
    displays += [llt_phicheck(G) == parse_element(s, "WQSym.PhiCheck") for G, s in LLT_PHICHECK.items()]
    displays.append(x_wqsym(SMALL[0]) == LinearCombination("WQSym.M", {u: ONE for u in packed_words(3)}))
    tables = all([min_G(G, s) for s in COLUMNS] == [w(x) for x in row] and
                 [min_G_prime(G, s) for s in COLUMNS] == [w(x) for x in row_p]
                 for G, row, row_p in zip(SMALL, MIN_TABLE, MIN_PRIME_TABLE))
    ok = ok_phi and ok_llt and all(displays) and len(displays) == 14 and tables
    return ok, f"{c1 + c2} graph checks, {sum(displays)}/{len(displays)} displays, min tables {tables}"


def criterion_9():
    displays = all(x1_mt(G) == parse_element(s, "WSym.mt") for G, s in X1_MT.items() if G.n == 3)
    ok_mt, c = suite("mt", 5)
    ok_rank, _ = suite("rank", 5)
    return displays and ok_mt and ok_rank, f"five n=3 displays {displays}, {c} checks, ranks 1,2,5,14,42"


def criterion_10():
    ok_perm, c1 = suite("lemma-perm", 5)
    ok_da, c2 = suite("descent-algebra", 5)
    return ok_perm and ok_da, f"{c1} right-action checks, {c2} descent-algebra checks"


def criterion_11():
    inv_a, inv_b = inverse_alphabet("1/(1-t)"), inverse_alphabet("1/(t-1)")
    closed = all(inv_a(I) == specialize_M("1-t", I) and inv_b(I) == specialize_M("t-1", I)
                 for n in range(1, 6) for I in compositions(n))
    names = ["1/(1-t)", "1/(t-1)", "1-t", "t-1"]
    lifts = all(wqsym_to_qsym(wqsym_transform(M(u), a)) == qsym_transform(wqsym_to_qsym(M(u)), a)
                for a in names for n in range(1, 6) for u in packed_words(n))
    pairs = 0
    split = True
    for n in range(1, 5):
        for u in packed_words(n):
            for v in packed_words(n):
                pairs += 1
                vs = v_set(u, v)
                if refines(v, u):
                    split &= LinearCombination("WQSym.M", {x: ONE for x in vs}) == split_product(u, v)
                else:
                    split &= not vs
    return closed and lifts and split, f"closed forms {closed}, lift {lifts}, V(u,w) on {pairs} pairs {split}"


def criterion_12():
    ok_path, _ = suite("path", 6)
    ok_series, _ = suite("smirnov", 5)
    return ok_path and ok_series, "Lambda expansions n<=6; sigma/lambda and Smirnov through degree 5"


def criterion_13():
    ok, count = suite("symmetry", 6)
    return ok, f"{count} graphs n<=6"


CRITERIA = [
    (1, "main identity (t-1)^n X_G(A/(t-1)) = LLT_G", criterion_1),
    (2, "commutative X2LLT identity", criterion_2),
    (3, "X_G at 1/(t-1) equals 1/(t-1)^n", criterion_3),
    (4, "st_G is Mahonian", criterion_4),
    (5, "insertion increments and visit order", criterion_5),
    (6, "code bijection", criterion_6),
    (7, "Hopf morphism", criterion_7),
    (8, "Phi and PhiCheck expansions", criterion_8),
    (9, "WSym layer and injectivity rank", criterion_9),
    (10, "internal-product layer", criterion_10),
    (11, "transform layer", criterion_11),
    (12, "path graphs and series", criterion_12),
    (13, "symmetry of X_G", criterion_13),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check, capsys):
    ok, detail = check()
    assert report(number, title, ok, detail, capsys)


if __name__ == "__main__":
    import sys
    results = [report(n, title, *check()) for n, title, check in CRITERIA]
    sys.exit(0 if all(results) else 1)
