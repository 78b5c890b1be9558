"""Nonnegative integers as base-B digit sequences, least significant first."""

from __future__ import annotations

from dataclasses import dataclass

from .poly import ClipRange


@dataclass(frozen=True)
class DigitNat:
    base: int
    digits: tuple = ()

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"base must be at least 2, got {self.base}")
        digits = tuple(self.digits)
        for d in digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")
        n = len(digits)
        while n and digits[n - 1] == 0:
            n -= 1
        object.__setattr__(self, "digits", digits[:n])

    @classmethod
    def from_int(cls, value: int, base: int) -> "DigitNat":
        if value < 0:
            raise ValueError("only nonnegative integers are supported")
        if base < 2:
            raise ValueError(f"base must be at least 2, got {base}")
        digits = []
        while value:
            value, d = divmod(value, base)
            digits.append(d)
        return cls(base, tuple(digits))

    def __int__(self) -> int:
        value = 0
        for d in reversed(self.digits):
            value = value * self.base + d
        return value

    def is_zero(self) -> bool:
        return not self.digits

    def __str__(self):
        return to_decimal(self)


@dataclass
class UnnormalizedColumns:
    """Column sums ``sums[i]`` of weight ``base**(offset + i)``, before carrying."""

    base: int
    offset: int
    sums: list


def iprec(n: DigitNat) -> int:
    return len(n.digits)


def icoeff(n: DigitNat, i: int) -> int:
    return n.digits[i] if 0 <= i < len(n.digits) else 0


def iclip(n: DigitNat, r: ClipRange) -> DigitNat:
    """Digits ``r.lo..r.hi`` kept at their positions (lower digits zeroed)."""
    if r.empty:
        return DigitNat(n.base)
    kept = n.digits[r.lo:r.hi + 1]
    return DigitNat(n.base, (0,) * r.lo + kept if kept else ())


def iclip_shifted(n: DigitNat, r: ClipRange) -> DigitNat:
    """Digits ``r.lo..r.hi`` moved down to position 0."""
    if r.empty:
        return DigitNat(n.base)
    return DigitNat(n.base, n.digits[r.lo:r.hi + 1])


def normalize(c: UnnormalizedColumns, incoming_carry: int = 0) -> DigitNat:
    """Carry-propagate ``c`` upwards starting with ``incoming_carry`` at ``c.offset``.

    Column sums may be negative (floor division carries a borrow); the total
    value must not be.
    """
    if incoming_carry < 0:
        raise ValueError("incoming carry must be nonnegative")
    if c.offset < 0:
        raise ValueError("column offset must be nonnegative")
    base = c.base
    carry = incoming_carry
    digits = [0] * c.offset
    for s in c.sums:
        carry, d = divmod(carry + s, base)
        digits.append(d)
    if carry < 0:
        raise ValueError("column sums describe a negative value")
    while carry:
        carry, d = divmod(carry, base)
        digits.append(d)
    return DigitNat(base, tuple(digits))


def _same_base(f: DigitNat, g: DigitNat) -> int:
    if f.base != g.base:
        raise ValueError(f"base mismatch: {f.base} vs {g.base}")
    return f.base


def oracle_int_product(f: DigitNat, g: DigitNat) -> DigitNat:
    """Full schoolbook tableau: every digit product added into its column."""
    base = _same_base(f, g)
    if f.is_zero() or g.is_zero():
        return DigitNat(base)
    cols = [0] * (len(f.digits) + len(g.digits) - 1)
    for i, a in enumerate(f.digits):
        if a:
            for j, b in enumerate(g.digits):
                cols[i + j] += a * b
    return normalize(UnnormalizedColumns(base, 0, cols))


def from_decimal(s: str, base: int) -> DigitNat:
    s = s.strip()
    if not s.isdigit() or not s.isascii():
        raise ValueError(f"not a nonnegative decimal numeral: {s!r}")
    return DigitNat.from_int(int(s), base)


def to_decimal(n: DigitNat) -> str:
    return str(int(n))
