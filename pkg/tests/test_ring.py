import pytest

from clipprod.ring import ZZ, CountingRing, IntegerRing, MatrixRing, OpCount, counting_wrap, snapshot


def test_integer_ring_ops():
    assert ZZ.zero == 0
    assert ZZ.add(3, 4) == 7
    assert ZZ.sub(3, 4) == -1
    assert ZZ.neg(5) == -5
    assert ZZ.mul(-3, 4) == -12
    assert ZZ.eq(2, 2) and not ZZ.eq(2, 3)
    assert isinstance(ZZ, IntegerRing)


def test_matrix_ring_is_noncommutative():
    m = MatrixRing(2)
    x = m.element([[1, 2], [3, 4]])
    y = m.element([[0, 1], [1, 0]])
    assert m.mul(x, y) == ((2, 1), (4, 3))
    assert m.mul(y, x) == ((3, 4), (1, 2))
    assert m.add(x, m.neg(x)) == m.zero
    assert m.sub(x, x) == m.zero
    assert m.eq(m.zero, ((0, 0), (0, 0)))


def test_matrix_ring_rejects_bad_shape():
    with pytest.raises(ValueError):
        MatrixRing(2).element([[1, 2, 3], [4, 5, 6]])


def test_counting_ring_counts_and_delegates():
    c = counting_wrap(ZZ)
    assert isinstance(c, CountingRing)
    assert c.mul(2, 3) == 6
    assert c.add(2, 3) == 5
    assert c.sub(2, 3) == -1
    assert c.neg(4) == -4
    assert c.eq(1, 1)
    # sub counts as an add; neg and eq are free
    assert snapshot(c) == OpCount(1, 2)
    c.reset()
    assert snapshot(c) == OpCount(0, 0)
    assert c.zero == 0


def test_counting_ring_wraps_matrices():
    m = MatrixRing(2)
    c = counting_wrap(m)
    x = m.element([[1, 1], [0, 1]])
    assert c.mul(x, x) == ((1, 2), (0, 1))
    assert c.mul_count == 1
