import pytest

from ncchromatic.partitions import (SCAN_ORDERS, NestingError, StaircaseDiagram, arcs, blocks,
                                    canonical, catalan, denest, eta, eta_inverse, is_nonnesting,
                                    nn_leq, nonnesting_partitions, set_partitions)


def test_canonical_and_blocks():
    assert canonical((3, 3, 1, 2)) == (1, 1, 2, 3)
    assert blocks((1, 2, 1, 2, 3)) == [[1, 3], [2, 4], [5]]
    assert arcs((1, 2, 1, 2, 3)) == [(1, 3), (2, 4)]


def test_denest_examples():
    assert denest((1, 2, 2, 1)) == (1, 2, 2, 3)
    assert denest((1, 2, 3, 4, 1, 3, 1, 2)) == (1, 2, 3, 4, 1, 3, 1, 5)


def test_denest_fiber():
    assert sorted(p for p in set_partitions(5) if denest(p) == (1, 2, 3, 2, 4)) == [
        (1, 2, 3, 2, 1), (1, 2, 3, 2, 4)]


def test_denest_scan_orders_agree():
    for n in range(1, 7):
        for p in set_partitions(n):
            results = {denest(p, order) for order in SCAN_ORDERS}
            assert len(results) == 1
            assert is_nonnesting(results.pop())


def test_nonnesting_counts_are_catalan():
    assert [len(nonnesting_partitions(n)) for n in range(8)] == [catalan(n) for n in range(8)]
    assert catalan(5) == 42


def test_eta():
    d = eta((1, 2, 1, 2, 3))
    assert str(d) == "(2,2,1)@5"
    assert d == StaircaseDiagram.parse("(2,2,1)@5")
    assert set(d.corners()) == {(1, 3), (2, 4)}
    with pytest.raises(NestingError):
        eta((1, 2, 2, 1))


def test_eta_bijection():
    for n in range(7):
        images = set()
        for p in nonnesting_partitions(n):
            d = eta(p)
            assert eta_inverse(d) == p
            images.add(d)
        assert len(images) == catalan(n)


def test_diagram_order():
    assert nn_leq((1, 2, 3), (1, 1, 1))
    assert not nn_leq((1, 1, 1), (1, 2, 3))
