import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ncchromatic.coeffring import ONE, t
from ncchromatic.freealg import (BASES, F, G, LinearCombination, M, N, QF, QM, S, Tensor, coproduct,
                                 element, f_to_m, from_json, hatS, internal, iota, iota_star, m,
                                 m_to_f, m_to_mt, m_to_phi, m_to_phicheck, mt, mt_to_m,
                                 n_right_action, pairing, parse_element, phi_to_m, phicheck_to_m,
                                 sym_internal, sym_to_fqsym, wqsym_to_qsym, wqsym_to_wsym,
                                 wsym_to_wqsym, OutsideSpan)
from ncchromatic.freealg import fqsym
from ncchromatic.freealg.wsym import denesting_fibers
from ncchromatic.partitions import nonnesting_partitions, set_partitions
from ncchromatic.words import compositions, packed_words


def Phi(u):
    return element("WQSym.Phi", u)


def w(s):
    return tuple(int(c) for c in s)


def test_wqsym_product_and_coproduct():
    assert (M((1,)) * M((1, 1))).to_text() == "M[111] + M[122] + M[211]"
    assert coproduct(M((1, 2, 1))).to_text() == "M[] ⊗ M[121] + M[11] ⊗ M[1] + M[121] ⊗ M[]"


def test_wqsym_associative_and_bialgebra():
    words = [u for n in range(3) for u in packed_words(n)]
    for a, b in itertools.product(words, repeat=2):
        x, y = M(a), M(b)
        assert coproduct(x * y) == coproduct(x) * coproduct(y)
    for a, b, c in itertools.product([(1,), (1, 1), (2, 1)], repeat=3):
        assert (M(a) * M(b)) * M(c) == M(a) * (M(b) * M(c))


def test_phi_examples():
    assert phi_to_m(Phi((1, 1, 1))).to_text() == "M[111] + M[112] + M[122] + M[123]"
    assert phi_to_m(Phi((2, 1, 2))).to_text() == "M[212] + M[213]"
    assert phi_to_m(Phi(w("133142"))) == M(w("133142")) + M(w("134152")) + M(w("144253")) + M(w("145263"))
    assert m_to_phi(M(w("133142"))) == Phi(w("133142")) - Phi(w("134152")) - Phi(w("144253")) + Phi(w("145263"))
    assert (Phi((1,)) * Phi((1, 2, 1))) == Phi(w("1121")) + Phi(w("2121")) + Phi(w("3121")) + Phi(w("2132"))


def test_phi_bases_invert():
    for n in range(5):
        for u in packed_words(n):
            assert m_to_phi(phi_to_m(Phi(u))) == Phi(u)
            x = element("WQSym.PhiCheck", u)
            assert m_to_phicheck(phicheck_to_m(x)) == x


def test_qsym():
    assert (QM((1,)) * QM((1,))).to_text() == "2*M[(1,1)] + M[(2)]"
    assert QF((1,)) * QF((2, 1)) == QF((3, 1)) + QF((2, 2)) + QF((2, 1, 1)) + QF((1, 2, 1))
    assert f_to_m(QF((2, 1))) == QM((2, 1)) + QM((1, 1, 1))
    for n in range(5):
        for I in compositions(n):
            assert m_to_f(f_to_m(QF(I))) == QF(I)


def test_commutative_image_is_morphism():
    assert wqsym_to_qsym(M((1, 2)) * M((1,))) == wqsym_to_qsym(M((1, 2))) * wqsym_to_qsym(M((1,)))


def test_wqsym_dual():
    assert internal(N(w("111122")), N(w("211212"))) == N(w("211234"))
    assert hatS((2, 1)).to_text() == "N[112] + N[121] + N[211]"
    assert n_right_action(N(w("111122")), w("451623")) == N(w("121211"))
    assert pairing(N((1, 2)), M((1, 2)) + M((2, 1))) == ONE


def test_fqsym():
    assert iota((1, 2, 3)).to_text() == "M[111] + M[112] + M[122] + M[123]"
    assert iota_star(w("13132")) == F(w("14253"))
    assert fqsym.internal(F((2, 1)), F((2, 1))) == F((1, 2))
    assert fqsym.f_to_g(fqsym.g_to_f(G((2, 3, 1)))) == G((2, 3, 1))


def test_sym_internal():
    assert sym_internal((2,), (1, 1)) == S((1, 1))
    for n in range(1, 5):
        for I in compositions(n):
            for J in compositions(n):
                assert sym_to_fqsym(sym_internal(I, J)) == iota_star(internal(hatS(I), hatS(J)))


def test_wsym_products():
    assert m((1,)) * m(w("1123")) == m(w("12234")) + m(w("11123")) + m(w("12213")) + m(w("12231"))
    assert m(w("1123")) * m((1,)) == m(w("11234")) + m(w("11233")) + m(w("11232")) + m(w("11231"))


def test_nonnesting_basis():
    assert mt_to_m(mt(w("1223"))) == m(w("1223")) + m(w("1221"))
    assert mt_to_m(mt(w("12334"))) == m(w("12334")) + m(w("12331")) + m(w("12332"))
    assert mt_to_m(mt(w("12233"))) == m(w("12233")) + m(w("12211"))
    assert mt_to_m(mt(w("12324"))) == m(w("12324")) + m(w("12321"))
    with pytest.raises(OutsideSpan):
        m_to_mt(m(w("1221")))
    for n in range(1, 6):
        fibers = denesting_fibers(n)
        assert sorted(fibers) == sorted(nonnesting_partitions(n))
        assert sorted(p for f in fibers.values() for p in f) == sorted(set_partitions(n))


def test_wsym_wqsym_round_trip():
    x = m((1, 2, 1)) * m((1,))
    assert wqsym_to_wsym(wsym_to_wqsym(x)) == x
    with pytest.raises(OutsideSpan):
        wqsym_to_wsym(M((1, 2)))


def test_text_and_json_round_trip():
    x = M((1, 2)).scale(t) + M((2, 1)) - M((1, 1)).scale(t ** 2 - 1)
    assert x.to_text() == "(-t^2+1)*M[11] + t*M[12] + M[21]"
    assert parse_element(x.to_text(), "WQSym.M") == x
    assert from_json(x.dumps()) == x
    y = QM((2, 1)).scale(ONE / (t - 1))
    assert parse_element(y.to_text(), "QSym.M") == y
    assert from_json(y.to_json()) == y
    assert isinstance(coproduct(x), Tensor)
    assert set(BASES) >= {"WQSym.M", "WQSym.Phi", "WQSym.PhiCheck", "WQSymDual.N", "QSym.M", "QSym.F",
                          "Sym.S", "Sym.Lambda", "FQSym.F", "FQSym.G", "WSym.m", "WSym.mt"}


words_st = st.integers(0, 4).flatmap(lambda n: st.sampled_from(packed_words(n)))


@settings(max_examples=60, deadline=None)
@given(words_st, words_st)
def test_product_commutes_with_commutative_image(a, b):
    assert wqsym_to_qsym(M(a) * M(b)) == wqsym_to_qsym(M(a)) * wqsym_to_qsym(M(b))


@settings(max_examples=40, deadline=None)
@given(words_st, words_st)
def test_phi_product_positive(a, b):
    # the Phi basis is multiplicative in the sense of positive structure constants
    prod = Phi(a) * Phi(b)
    assert all(c == ONE for _, c in prod.items())
