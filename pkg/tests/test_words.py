from hypothesis import given, settings, strategies as st

from ncchromatic.words import (advances, bar, biletter_pack, coarsenings, compose, compositions,
                               conjugate, descents, dst_subset, dst_word, dst_words, evaluation,
                               from_descents, inverse, maj, ordered_bell, pack, packed_words,
                               parse_word, permutations, refines, right_action, standardize,
                               strong_refinement_set, word_str)


def test_pack_standardize_evaluation():
    assert pack((5, 2, 5, 9)) == (2, 1, 2, 3)
    assert standardize((2, 1, 2, 1)) == (3, 1, 4, 2)
    assert evaluation((1, 3, 1, 2)) == (2, 1, 1)


def test_biletter_pack_and_right_action():
    assert biletter_pack((1, 2, 1, 2, 1, 1), (2, 1, 2, 2, 1, 1)) == (2, 3, 2, 4, 1, 1)
    assert biletter_pack((1, 1, 1, 1, 2, 2), (2, 1, 1, 2, 1, 2)) == (2, 1, 1, 2, 3, 4)
    assert right_action((1, 1, 1, 1, 2, 2), (4, 5, 1, 6, 2, 3)) == (1, 2, 1, 2, 1, 1)


def test_refinement_examples():
    assert [v for v in packed_words(3) if refines(v, (2, 1, 2))] == [(2, 1, 2), (2, 1, 3), (3, 1, 2)]
    assert sum(1 for v in packed_words(4) if refines(v, (2, 1, 2, 2))) == 13


def test_dst_lattice():
    sigma = (1, 3, 4, 2, 5)
    assert advances(sigma) == {1, 3, 4}
    assert sorted(dst_words(sigma)) == [
        (1, 2, 2, 1, 2), (1, 2, 2, 1, 3), (1, 2, 3, 1, 3), (1, 2, 3, 1, 4),
        (1, 3, 3, 2, 3), (1, 3, 3, 2, 4), (1, 3, 4, 2, 4), (1, 3, 4, 2, 5)]


def test_dst_is_boolean_lattice():
    for n in range(1, 6):
        for s in permutations(n):
            words = dst_words(s)
            assert len(words) == 2 ** len(advances(s))
            for u in words:
                assert standardize(u) == s
                assert dst_word(s, dst_subset(u)) == u


def test_every_packed_word_in_one_lattice():
    for n in range(5):
        assert sum(len(dst_words(s)) for s in permutations(n)) == len(packed_words(n)) == ordered_bell(n)


def test_compositions():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((3,)) == (1, 1, 1)
    assert maj((1, 2, 1)) == 4
    assert descents((2, 1, 3)) == {2, 3}
    assert from_descents({2, 3}, 6) == (2, 1, 3)
    assert len(compositions(5)) == 16


def test_coarsenings():
    assert coarsenings((1, 2, 3)) == [(1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 2, 3)]


def test_strong_refinement_contains_word():
    u = (2, 1, 2)
    assert u in strong_refinement_set(u)


def test_word_text():
    assert word_str((1, 2, 1)) == "121"
    assert parse_word("1,12,3") == (1, 12, 3)
    assert parse_word("121") == (1, 2, 1)


perms = st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(1, n + 1))).map(tuple))


@settings(max_examples=80, deadline=None)
@given(perms)
def test_permutation_group_laws(s):
    e = tuple(range(1, len(s) + 1))
    assert compose(s, inverse(s)) == e
    assert compose(inverse(s), s) == e
    assert bar(bar(s)) == s


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 4), max_size=7))
def test_pack_idempotent(w):
    p = pack(w)
    assert pack(p) == p
    assert standardize(p) == standardize(w)
    assert sum(evaluation(p)) == len(w)
