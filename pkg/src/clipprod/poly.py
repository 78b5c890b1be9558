"""Dense univariate polynomials stored with an explicit lowest exponent."""

from __future__ import annotations

from dataclasses import dataclass

from .ring import ZZ, RingContract


@dataclass(frozen=True)
class ClipRange:
    """Inclusive integer interval ``[lo..hi]``; ``lo > hi`` is the empty range."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 0:
            raise ValueError(f"range start must be nonnegative, got {self.lo}")

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    @property
    def width(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __contains__(self, k: int) -> bool:
        return self.lo <= k <= self.hi

    @classmethod
    def parse(cls, text: str) -> "ClipRange":
        """Parse ``"a..b"``."""
        lo, sep, hi = text.strip().partition("..")
        if not sep:
            raise ValueError(f"range must look like a..b, got {text!r}")
        return cls(int(lo), int(hi))

    def __str__(self):
        return f"{self.lo}..{self.hi}"


class ShiftedPoly:
    """Polynomial ``sum(coeffs[i] * x**(offset + i))`` in canonical form.

    Canonical form has nonzero first and last coefficients; the zero
    polynomial is ``offset=0`` with no coefficients.  Instances are immutable.
    """

    __slots__ = ("offset", "coeffs", "ring")

    def __init__(self, coeffs=(), offset: int = 0, ring: RingContract = ZZ):
        if offset < 0:
            raise ValueError("offset must be nonnegative")
        zero, eq = ring.zero, ring.eq
        coeffs = tuple(coeffs)
        lo, hi = 0, len(coeffs)
        while hi > lo and eq(coeffs[hi - 1], zero):
            hi -= 1
        while lo < hi and eq(coeffs[lo], zero):
            lo += 1
        if lo == hi:
            offset, coeffs = 0, ()
        elif lo or hi != len(coeffs):
            coeffs = coeffs[lo:hi]
            offset += lo
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("ShiftedPoly is immutable")

    @classmethod
    def from_dict(cls, terms: dict, ring: RingContract = ZZ) -> "ShiftedPoly":
        terms = {e: c for e, c in terms.items() if not ring.eq(c, ring.zero)}
        if not terms:
            return cls((), 0, ring)
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, ring.zero) for e in range(lo, hi + 1)], lo, ring)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return self.offset + len(self.coeffs) - 1 if self.coeffs else -1

    def dense(self) -> list:
        """Coefficients of ``x**0 .. x**degree`` as a list."""
        if not self.coeffs:
            return []
        return [self.ring.zero] * self.offset + list(self.coeffs)

    def terms(self):
        """Yield ``(exponent, coefficient)`` for nonzero coefficients."""
        zero, eq = self.ring.zero, self.ring.eq
        for i, c in enumerate(self.coeffs):
            if not eq(c, zero):
                yield self.offset + i, c

    def __eq__(self, other):
        if not isinstance(other, ShiftedPoly):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.offset, self.coeffs))

    def __repr__(self):
        return f"ShiftedPoly({format_poly(self)!r})"


def prec(p: ShiftedPoly) -> int:
    return p.degree + 1


def coeff(p: ShiftedPoly, k: int):
    i = k - p.offset
    if 0 <= i < len(p.coeffs):
        return p.coeffs[i]
    return p.ring.zero


def clip(p: ShiftedPoly, r: ClipRange) -> ShiftedPoly:
    lo = max(r.lo, p.offset)
    hi = min(r.hi, p.degree)
    if lo > hi:
        return ShiftedPoly((), 0, p.ring)
    return ShiftedPoly(p.coeffs[lo - p.offset:hi - p.offset + 1], lo, p.ring)


def reverse(p: ShiftedPoly, degree: int | None = None) -> ShiftedPoly:
    """``x**d * p(1/x)`` with ``d`` the degree of ``p`` unless given.

    The offset counts towards the degree, so a factor ``x**k`` in ``p``
    disappears on reversal.
    """
    if p.is_zero():
        raise ValueError("cannot reverse the zero polynomial")
    d = p.degree if degree is None else degree
    if d < p.degree:
        raise ValueError(f"reversal degree {d} is below the polynomial degree {p.degree}")
    return ShiftedPoly(p.coeffs[::-1], d - p.degree, p.ring)


def shift(p: ShiftedPoly, k: int) -> ShiftedPoly:
    """Multiply by ``x**k``; no coefficient arithmetic."""
    if p.is_zero():
        return p
    if p.offset + k < 0:
        raise ValueError(f"shift by {k} moves the polynomial below x^0")
    return ShiftedPoly(p.coeffs, p.offset + k, p.ring)


def _combine(p: ShiftedPoly, q: ShiftedPoly, op, ring) -> ShiftedPoly:
    ring = ring or p.ring
    if q.is_zero():
        return ShiftedPoly(p.coeffs, p.offset, ring)
    if p.is_zero():
        if op is ring.add:
            return ShiftedPoly(q.coeffs, q.offset, ring)
        return ShiftedPoly([ring.neg(c) for c in q.coeffs], q.offset, ring)
    lo = min(p.offset, q.offset)
    hi = max(p.degree, q.degree)
    out = []
    for k in range(lo, hi + 1):
        i, j = k - p.offset, k - q.offset
        in_p = 0 <= i < len(p.coeffs)
        in_q = 0 <= j < len(q.coeffs)
        if in_p and in_q:
            out.append(op(p.coeffs[i], q.coeffs[j]))
        elif in_p:
            out.append(p.coeffs[i])
        elif in_q:
            out.append(q.coeffs[j] if op is ring.add else ring.neg(q.coeffs[j]))
        else:
            out.append(ring.zero)
    return ShiftedPoly(out, lo, ring)


def add(p: ShiftedPoly, q: ShiftedPoly, ring: RingContract | None = None) -> ShiftedPoly:
    ring = ring or p.ring
    return _combine(p, q, ring.add, ring)


def sub(p: ShiftedPoly, q: ShiftedPoly, ring: RingContract | None = None) -> ShiftedPoly:
    ring = ring or p.ring
    return _combine(p, q, ring.sub, ring)


def oracle_full_product(f: ShiftedPoly, g: ShiftedPoly) -> ShiftedPoly:
    """Schoolbook product, term by term.  Ground truth for the clipped methods."""
    ring = f.ring
    if f.is_zero() or g.is_zero():
        return ShiftedPoly((), 0, ring)
    out = [ring.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = ring.add(out[i + j], ring.mul(a, b))
    return ShiftedPoly(out, f.offset + g.offset, ring)


def parse_poly(text: str) -> ShiftedPoly:
    """Parse ``e1:c1,e2:c2,...`` with strictly increasing exponents, or ``0``."""
    text = text.strip()
    if text == "0":
        return ShiftedPoly()
    terms = {}
    last = -1
    for item in text.split(","):
        e, sep, c = item.partition(":")
        if not sep:
            raise ValueError(f"bad term {item!r}, expected exponent:coefficient")
        e = int(e)
        if e <= last:
            raise ValueError("exponents must be nonnegative and strictly increasing")
        last = e
        terms[e] = int(c)
    return ShiftedPoly.from_dict(terms)


def format_poly(p: ShiftedPoly) -> str:
    parts = [f"{e}:{c}" for e, c in p.terms()]
    return ",".join(parts) if parts else "0"
