import itertools

import pytest

from ncchromatic.coeffring import ONE, t
from ncchromatic.freealg import M, N, QM, S, LinearCombination, pairing, wqsym_to_qsym
from ncchromatic.transforms import (ALPHABETS, graded_series_inverse, inverse_alphabet,
                                    nondecreasing_words, nonincreasing_words, qsym_transform,
                                    sigma_series, specialize_M, split_product, split_words, sym_transform,
                                    v_set, wqsym_transform, wqsymdual_transform)
from ncchromatic.words import compositions, maj, packed_words, refines

NAMES = ["1/(1-t)", "1/(t-1)", "1-t", "t-1"]


def _series_coeffs(I, degree):
    """Coefficients of sum over e_1 > ... > e_l >= 0 of t^(sum i_k e_k), below degree."""
    out = [0] * degree
    for es in itertools.combinations(range(degree), len(I)):
        d = sum(i * e for i, e in zip(I, reversed(es)))
        if d < degree:
            out[d] += 1
    return out


def _poly_mul(a, b, degree):
    out = [0] * degree
    for i, x in enumerate(a[:degree]):
        for j, y in enumerate(b[:degree - i]):
            out[i + j] += x * y
    return out


def test_one_over_one_minus_t_against_power_series():
    # the alphabet 1, t, t^2, ... ordered by decreasing exponent
    D = 14
    for n in range(1, 6):
        for I in compositions(n):
            series = _series_coeffs(I, D)
            s, den = 0, [1] + [0] * (D - 1)
            for p in I:
                s += p
                f = [0] * D
                f[0] = 1
                if s < D:
                    f[s] = -1
                den = _poly_mul(den, f, D)
            lhs = _poly_mul(series, den, D)
            rhs = [0] * D
            rhs[maj(I)] = 1
            assert lhs == rhs, I


def test_inverse_pairs_match_closed_forms():
    A, B = inverse_alphabet("1/(1-t)"), inverse_alphabet("1/(t-1)")
    for n in range(1, 6):
        for I in compositions(n):
            assert A(I) == specialize_M("1-t", I)
            assert B(I) == specialize_M("t-1", I)


def test_scaling_laws():
    for n in range(1, 6):
        for I in compositions(n):
            assert specialize_M("t-1", I) == t ** n * specialize_M("1-t", I).reciprocal_substitution()
            assert specialize_M("1/(t-1)", I) == specialize_M("1/(1-t)", I).reciprocal_substitution() / t ** n


def test_closed_form_values():
    assert specialize_M("1/(t-1)", (1,)) == ONE / (t - 1)
    assert specialize_M("t-1", (1, 2)) == -(t ** 2 - 1)
    assert specialize_M("1-t", (2,)) == t ** 0 - t ** 2
    assert specialize_M("1/(1-t)", (1, 1)) == t / ((1 - t) * (1 - t ** 2))


def test_transforms_are_mutually_inverse():
    for a, b in [("1/(1-t)", "1-t"), ("1/(t-1)", "t-1")]:
        for n in range(1, 5):
            for I in compositions(n):
                x = QM(I)
                assert qsym_transform(qsym_transform(x, a), b) == x
                assert qsym_transform(qsym_transform(x, b), a) == x
                y = S(I)
                assert sym_transform(sym_transform(y, a), b) == y
            for u in packed_words(n):
                assert wqsym_transform(wqsym_transform(M(u), a), b) == M(u)


def test_transform_of_empty_word():
    for name in NAMES:
        assert wqsym_transform(M(()), name) == M(())
        assert qsym_transform(QM(()), name) == QM(())


def test_wqsym_transform_lifts_qsym_transform():
    for name in NAMES:
        for n in range(1, 6):
            for u in packed_words(n):
                assert wqsym_to_qsym(wqsym_transform(M(u), name)) == qsym_transform(wqsym_to_qsym(M(u)), name)


def test_split_words_give_split_product():
    for n in range(1, 5):
        for u in packed_words(n):
            monotone = list(u) == sorted(u)
            for w in packed_words(n):
                vs = v_set(u, w)
                if not refines(w, u):
                    assert not vs
                    continue
                total = LinearCombination("WQSym.M", {v: ONE for v in vs})
                assert total == split_product(u, w)
                if monotone:
                    prod = M(())
                    for piece in split_words(u, w):
                        prod = prod * M(piece)
                    assert total == prod


def test_dual_transform_is_adjoint():
    for name in NAMES:
        for n in range(1, 4):
            for u in packed_words(n):
                left = wqsymdual_transform(u, name)
                for v in packed_words(n):
                    assert pairing(left, M(v)) == pairing(N(u), wqsym_transform(M(v), name))


def test_series_closed_forms():
    for n in range(6):
        sig = LinearCombination("WQSym.M", {u: t ** (n - max(u, default=0)) * (t - 1) ** max(u, default=0)
                                            for u in nonincreasing_words(n)})
        lam = LinearCombination("WQSym.M", {u: (1 - t) ** max(u, default=0) for u in nondecreasing_words(n)})
        assert sigma_series("sigma1_t_minus_1", n) == sig
        assert sigma_series("lambda_minus1_t_minus_1", n) == lam


def test_series_inverse():
    sig = [sigma_series("sigma1_t_minus_1", n) for n in range(6)]
    lam = [sigma_series("lambda_minus1_t_minus_1", n) for n in range(6)]
    assert graded_series_inverse(sig) == lam


def test_unknown_alphabet():
    with pytest.raises((KeyError, ValueError)):
        specialize_M("2t", (1,))
    assert set(NAMES) <= set(ALPHABETS)
