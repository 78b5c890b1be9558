"""Coefficient rings the clipped-product algorithms are generic over.

A ring is any object exposing ``add``, ``sub``, ``neg``, ``mul``, ``eq`` and a
``zero`` attribute.  :class:`CountingRing` wraps another ring and tallies the
coefficient operations performed through it.
"""

from __future__ import annotations

import operator
from typing import Any, NamedTuple, Protocol


class RingContract(Protocol):
    zero: Any

    def add(self, x, y): ...
    def sub(self, x, y): ...
    def neg(self, x): ...
    def mul(self, x, y): ...
    def eq(self, x, y) -> bool: ...


class IntegerRing:
    """Exact integers (Python ``int``)."""

    zero = 0
    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    neg = staticmethod(operator.neg)
    mul = staticmethod(operator.mul)
    eq = staticmethod(operator.eq)

    def __repr__(self):
        return "ZZ"


ZZ = IntegerRing()


class MatrixRing:
    """Square integer matrices of a fixed size, stored as nested tuples."""

    def __init__(self, n: int = 2):
        if n < 1:
            raise ValueError("matrix size must be positive")
        self.n = n
        self.zero = tuple((0,) * n for _ in range(n))

    def element(self, rows) -> tuple:
        m = tuple(tuple(int(v) for v in row) for row in rows)
        if len(m) != self.n or any(len(row) != self.n for row in m):
            raise ValueError(f"expected a {self.n}x{self.n} matrix")
        return m

    def add(self, x, y):
        return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))

    def sub(self, x, y):
        return tuple(tuple(a - b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))

    def neg(self, x):
        return tuple(tuple(-a for a in row) for row in x)

    def mul(self, x, y):
        cols = tuple(zip(*y))
        return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in x)

    def eq(self, x, y):
        return x == y

    def __repr__(self):
        return f"MatrixRing({self.n})"


class OpCount(NamedTuple):
    muls: int
    adds: int


class CountingRing:
    """Delegates to ``inner`` and counts multiplications and additions.

    Subtractions are tallied as additions; negation and equality are free.
    Not thread-safe: share one instance per measurement only.
    """

    def __init__(self, inner: RingContract = ZZ):
        self.inner = inner
        self.zero = inner.zero
        self.mul_count = 0
        self.add_count = 0

    def add(self, x, y):
        self.add_count += 1
        return self.inner.add(x, y)

    def sub(self, x, y):
        self.add_count += 1
        return self.inner.sub(x, y)

    def neg(self, x):
        return self.inner.neg(x)

    def mul(self, x, y):
        self.mul_count += 1
        return self.inner.mul(x, y)

    def eq(self, x, y):
        return self.inner.eq(x, y)

    def reset(self) -> None:
        self.mul_count = 0
        self.add_count = 0

    def __repr__(self):
        return f"CountingRing({self.inner!r}, muls={self.mul_count}, adds={self.add_count})"


def counting_wrap(r: RingContract) -> CountingRing:
    return CountingRing(r)


def snapshot(c: CountingRing) -> OpCount:
    return OpCount(c.mul_count, c.add_count)
