"""Clipped integer products.

Digit positions ``a..b`` of ``f * g`` are returned at their original
positions.  Exact mode sums every column below ``a`` so the carry into
position ``a`` is right; theorem mode sums only ``G`` guard columns below
``a``, which can leave the result one unit low in position ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import clipped_poly as cp
from .digits import DigitNat, UnnormalizedColumns, iclip, normalize
from .poly import ClipRange, ShiftedPoly
from .ring import ZZ

THEOREM = "theorem"
EXACT = "exact"


def ceil_log(n: int, base: int) -> int:
    """Smallest ``e`` with ``base**e >= n`` (integer arithmetic only)."""
    if n < 1:
        raise ValueError("ceil_log needs n >= 1")
    e, power = 0, 1
    while power < n:
        power *= base
        e += 1
    return e


def guard_digits(a: int, prec_g: int, base: int) -> int:
    if a < 0 or prec_g < 1 or base < 2:
        raise ValueError("guard_digits needs a >= 0, prec_g >= 1, base >= 2")
    return min(a, ceil_log(prec_g, base) + 1)


@dataclass(frozen=True)
class GuardPolicy:
    mode: str = EXACT

    def __post_init__(self):
        if self.mode not in (THEOREM, EXACT):
            raise ValueError(f"guard mode must be 'theorem' or 'exact', got {self.mode!r}")

    def guard(self, a: int, prec_g: int, base: int) -> int:
        if self.mode == EXACT:
            return a
        return guard_digits(a, prec_g, base)


EXACT_POLICY = GuardPolicy(EXACT)
THEOREM_POLICY = GuardPolicy(THEOREM)


def _check(f: DigitNat, g: DigitNat) -> int:
    if f.base != g.base:
        raise ValueError(f"base mismatch: {f.base} vs {g.base}")
    return f.base


def classical_clipped_int(f: DigitNat, g: DigitNat, r: ClipRange,
                          policy: GuardPolicy = EXACT_POLICY, ring=ZZ,
                          carries: list | None = None) -> DigitNat:
    """Sum tableau columns ``a-G .. b`` with a running carry, keep digits from ``a`` up.

    Pass a list as ``carries`` to record the carry out of every column.
    """
    base = _check(f, g)
    if r.empty or f.is_zero() or g.is_zero():
        return DigitNat(base)
    fd, gd = f.digits, g.digits
    if len(gd) > len(fd):
        fd, gd = gd, fd
    pf, pg = len(fd), len(gd)
    a, b = r.lo, min(r.hi, pf + pg - 1)
    if a > b:
        return DigitNat(base)
    guard = policy.guard(a, pg, base)
    mul, add = ring.mul, ring.add

    carry = 0
    kept = []
    for k in range(a - guard, b + 1):
        t = carry
        for i in range(max(0, k - pg + 1), min(k, pf - 1) + 1):
            t = add(t, mul(fd[i], gd[k - i]))
        carry, t = divmod(t, base)
        if carries is not None:
            carries.append(carry)
        if k >= a:
            kept.append(t)
    return DigitNat(base, (0,) * a + tuple(kept))


def _as_poly(n: DigitNat) -> ShiftedPoly:
    return ShiftedPoly(n.digits)


def _positioned(columns: ShiftedPoly, base: int, lo: int, r: ClipRange) -> DigitNat:
    """Carry-normalize the column sums from ``lo`` upwards and clip to ``r``."""
    hi = r.hi
    if columns.is_zero():
        return DigitNat(base)
    top = min(hi, columns.degree)
    sums = [0] * (top - lo + 1)
    for e, c in columns.terms():
        if lo <= e <= top:
            sums[e - lo] = c
    return iclip(normalize(UnnormalizedColumns(base, lo, sums)), r)


def via_poly_method(f: DigitNat, g: DigitNat, r: ClipRange, method,
                    policy: GuardPolicy = EXACT_POLICY) -> DigitNat:
    """Run a clipped polynomial ``method(fp, gp, range)`` on the digit
    polynomials over ``[a-G..b]``, then carry-normalize.

    Polynomial coefficients in range are exact column sums, so the guard
    analysis of the classical method carries over unchanged.
    """
    base = _check(f, g)
    if r.empty or f.is_zero() or g.is_zero():
        return DigitNat(base)
    a = r.lo
    guard = policy.guard(a, min(len(f.digits), len(g.digits)), base)
    lo = a - guard
    columns = method(_as_poly(f), _as_poly(g), ClipRange(lo, r.hi))
    return _positioned(columns, base, lo, r)


def karatsuba_clipped_int(f: DigitNat, g: DigitNat, r: ClipRange,
                          policy: GuardPolicy = EXACT_POLICY,
                          kcfg: cp.KaratsubaConfig | None = None, ring=ZZ) -> DigitNat:
    return via_poly_method(f, g, r, lambda fp, gp, rr: cp.karatsuba_clipped(fp, gp, rr, ring, kcfg), policy)


def full_product_int(f: DigitNat, g: DigitNat, kcfg: cp.KaratsubaConfig | None = None, ring=ZZ) -> DigitNat:
    base = _check(f, g)
    if f.is_zero() or g.is_zero():
        return DigitNat(base)
    columns = cp.full_product(_as_poly(f), _as_poly(g), ring, kcfg)
    sums = [0] * (columns.degree + 1)
    for e, c in columns.terms():
        sums[e] = c
    return normalize(UnnormalizedColumns(base, 0, sums))


def direct_clipped_int(f: DigitNat, g: DigitNat, r: ClipRange, kcfg=None, ring=ZZ) -> DigitNat:
    return iclip(full_product_int(f, g, kcfg, ring), r)


def bottom_clipped_int(f: DigitNat, g: DigitNat, b: int, kcfg=None, ring=ZZ) -> DigitNat:
    """Exact digits ``0..b``: higher input digits cannot reach them."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    r = ClipRange(0, b)
    return iclip(full_product_int(iclip(f, r), iclip(g, r), kcfg, ring), r)


def clipped_int_from_bottom(f: DigitNat, g: DigitNat, r: ClipRange, kcfg=None, ring=ZZ) -> DigitNat:
    if r.empty:
        return DigitNat(_check(f, g))
    return iclip(bottom_clipped_int(f, g, r.hi, kcfg, ring), r)


def within_one_unit(expected: DigitNat, value: DigitNat, r: ClipRange) -> bool:
    """True when ``(expected - value) mod B**(b+1)`` is ``0`` or ``B**a``."""
    base = expected.base
    diff = (int(expected) - int(value)) % base ** (r.hi + 1)
    return diff in (0, base ** r.lo)
