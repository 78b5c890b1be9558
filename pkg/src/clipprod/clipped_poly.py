"""Clipped polynomial products.

Every public function returns ``clip(f * g, r)`` computed a different way.
Internally the kernels work on plain coefficient lists indexed from ``x**0``
and return ``(start, values)`` pairs, where ``values[i]`` is the coefficient
of ``x**(start + i)``.  Offsets of the inputs are factored out first, so a
product of ``x**k * f`` costs the same as a product of ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import ClipRange, ShiftedPoly, clip, reverse, shift
from .ring import RingContract

DEFAULT_CUTOVER = 32


@dataclass(frozen=True)
class KaratsubaConfig:
    """``cutover_prec``: operands whose shorter factor has fewer coefficients
    than this are multiplied classically.  ``count_mode`` recurses all the
    way to single coefficients."""

    cutover_prec: int = DEFAULT_CUTOVER
    count_mode: bool = False

    def __post_init__(self):
        if self.cutover_prec < 1:
            raise ValueError("cutover_prec must be at least 1")

    @property
    def cutover(self) -> int:
        return 1 if self.count_mode else self.cutover_prec


COUNT_MODE = KaratsubaConfig(count_mode=True)


@dataclass(frozen=True)
class MuldersConfig:
    fraction: Fraction = Fraction(7, 10)

    def __post_init__(self):
        frac = Fraction(self.fraction)
        if not Fraction(1, 2) < frac <= 1:
            raise ValueError(f"Mulders fraction must lie in (1/2, 1], got {frac}")
        object.__setattr__(self, "fraction", frac)

    def split(self, n: int) -> int:
        """Size of the full sub-product, ``ceil(fraction * n)``."""
        return -(-self.fraction.numerator * n // self.fraction.denominator)


# -- list kernels -----------------------------------------------------------

def _trim(f: list, ring) -> list:
    zero, eq = ring.zero, ring.eq
    n = len(f)
    while n and eq(f[n - 1], zero):
        n -= 1
    return f if n == len(f) else f[:n]


def _classical(f: list, g: list, a: int, b: int, ring) -> tuple[int, list]:
    """Column sums for ``k`` in ``[a..b]`` over the exact convolution window."""
    df, dg = len(f) - 1, len(g) - 1
    lo, hi = max(a, 0), min(b, df + dg)
    mul, add = ring.mul, ring.add
    out = []
    for k in range(lo, hi + 1):
        i0, i1 = max(0, k - dg), min(k, df)
        t = mul(f[i0], g[k - i0])
        for i in range(i0 + 1, i1 + 1):
            t = add(t, mul(f[i], g[k - i]))
        out.append(t)
    return lo, out


def _at(res: tuple[int, list], e: int):
    start, vals = res
    i = e - start
    if 0 <= i < len(vals):
        return vals[i]
    return None


def _accumulate(out: list, base: int, res: tuple[int, list], at: int, lo: int, hi: int,
                op, neg=None) -> None:
    """Fold ``res`` shifted by ``at`` into ``out`` (indexed from ``base``) over ``[lo..hi]``.

    Empty slots (``None``) take the value directly, negated when ``neg`` is given.
    """
    start, vals = res
    k0 = max(lo, start + at)
    k1 = min(hi, start + at + len(vals) - 1)
    for k in range(k0, k1 + 1):
        v = vals[k - at - start]
        if v is None:
            continue
        cur = out[k - base]
        if cur is not None:
            out[k - base] = op(cur, v)
        else:
            out[k - base] = v if neg is None else neg(v)


def _padd(x: list, y: list, ring) -> list:
    if len(x) < len(y):
        x, y = y, x
    out = list(x)
    add = ring.add
    for i, v in enumerate(y):
        out[i] = add(out[i], v)
    return out


def _restrict(i: int, p: int) -> int:
    return 0 if i < 0 else (p - 2 if i > p - 2 else i)


def _kara(f: list, g: list, a: int, b: int, ring, cutover: int) -> tuple[int, list]:
    f = _trim(f, ring)
    g = _trim(g, ring)
    if not f or not g:
        return (max(a, 0), [])
    df, dg = len(f) - 1, len(g) - 1
    if a > df + dg or a > b:
        return (max(a, 0), [])
    if min(df, dg) + 1 < cutover:
        return _classical(f, g, a, b, ring)
    if b == 0:
        return (0, [ring.mul(f[0], g[0])])

    p = max(df, dg) + 1
    p += p % 2
    h = p // 2
    fl, fh = f[:h], f[h:]
    gl, gh = g[:h], g[h:]

    if b < h:
        return _kara(fl, gl, a, b, ring, cutover)
    if a > 3 * h - 2:
        start, vals = _kara(fh, gh, a - p, b - p, ring, cutover)
        return (start + p, vals)

    zha, zhb = _restrict(a - p, p), _restrict(b - p, p)
    zma, zmb = _restrict(a - h, p), _restrict(b - h, p)
    zla, zlb = _restrict(a, p), _restrict(b, p)
    zha, zhb = min(zha, zma), max(zhb, zmb)
    zla, zlb = min(zla, zma), max(zlb, zmb)

    zh = _kara(fh, gh, zha, zhb, ring, cutover)
    zl = _kara(fl, gl, zla, zlb, ring, cutover)
    zm = _kara(_padd(fh, fl, ring), _padd(gh, gl, ring), zma, zmb, ring, cutover)

    # zm := zm - zh - zl over zm's range; any of the three may be empty there
    mid = []
    sub, neg = ring.sub, ring.neg
    for e in range(zma, zmb + 1):
        v = _at(zm, e)
        for part in (zh, zl):
            w = _at(part, e)
            if w is not None:
                v = neg(w) if v is None else sub(v, w)
        mid.append(v)

    lo, hi = max(a, 0), min(b, df + dg)
    out = [None] * (hi - lo + 1)
    add = ring.add
    _accumulate(out, lo, zh, p, lo, hi, add)
    _accumulate(out, lo, (zma, mid), h, lo, hi, add)
    _accumulate(out, lo, zl, 0, lo, hi, add)
    zero = ring.zero
    return lo, [zero if v is None else v for v in out]


def _full(f: list, g: list, ring, cutover: int) -> tuple[int, list]:
    return _kara(f, g, 0, len(f) + len(g) - 2, ring, cutover)


def _mulders(f: list, g: list, n: int, ring, frac: MuldersConfig, cutover: int) -> tuple[int, list]:
    """Bottom ``n`` coefficients of ``f * g``."""
    f = _trim(f[:n], ring)
    g = _trim(g[:n], ring)
    if not f or not g or n <= 0:
        return (0, [])
    if n < cutover:
        return _classical(f, g, 0, n - 1, ring)
    k = frac.split(n)
    if k >= n:
        start, vals = _full(f, g, ring, cutover)
        return start, vals[:n - start]
    out = [None] * n
    add = ring.add
    full = _full(f[:k], g[:k], ring, cutover)
    _accumulate(out, 0, full, 0, 0, n - 1, add)
    m = n - k
    _accumulate(out, 0, _mulders(f[k:], g[:m], m, ring, frac, cutover), k, 0, n - 1, add)
    _accumulate(out, 0, _mulders(f[:m], g[k:], m, ring, frac, cutover), k, 0, n - 1, add)
    zero = ring.zero
    return 0, [zero if v is None else v for v in out]


# -- band tiling plan -------------------------------------------------------

@dataclass(frozen=True)
class BandPlan:
    """Index boxes ``(i0, i1, j0, j1)`` (half-open) of the product tableau.

    ``tiles`` are added, ``overlaps`` subtracted, and ``residual`` lists
    ``(k, i_lo, i_hi)`` column pieces summed term by term.
    """

    tiles: tuple
    overlaps: tuple
    residual: tuple


def default_band_step(h: int) -> int:
    return max(1, -(-5 * h // 8))


def band_plan(nf: int, ng: int, lo: int, hi: int, step: int | None = None) -> BandPlan:
    """Tile the anti-diagonal band ``lo <= i + j <= hi`` of an ``nf`` x ``ng`` tableau."""
    lo, hi = max(lo, 0), min(hi, nf + ng - 2)
    if lo > hi:
        return BandPlan((), (), ())
    h = hi - lo + 1
    d = step or default_band_step(h)
    if d < -(-h // 2):
        raise ValueError("band step must be at least half the tile size")
    corner_sum = lo - (h - 1) // 2
    i_min, i_max = max(0, lo - ng + 1), min(nf - 1, hi)

    tiles = []
    i0 = i_min
    while i0 <= i_max:
        j0 = corner_sum - i0
        box = (max(i0, 0), min(i0 + h, nf), max(j0, 0), min(j0 + h, ng))
        tiles.append(box)
        i0 += d
    overlaps = []
    for (a0, a1, b0, b1), (c0, c1, e0, e1) in zip(tiles, tiles[1:]):
        box = (max(a0, c0), min(a1, c1), max(b0, e0), min(b1, e1))
        if box[0] < box[1] and box[2] < box[3]:
            overlaps.append(box)
    tiles = [t for t in tiles if t[0] < t[1] and t[2] < t[3]]

    residual = []
    for k in range(lo, hi + 1):
        col_lo, col_hi = max(0, k - ng + 1), min(k, nf - 1)
        covered = []
        for i0, i1, j0, j1 in tiles:
            c0, c1 = max(i0, k - j1 + 1), min(i1 - 1, k - j0)
            if c0 <= c1:
                covered.append((c0, c1))
        covered.sort()
        nxt = col_lo
        for c0, c1 in covered:
            if c0 > nxt:
                residual.append((k, nxt, min(c0 - 1, col_hi)))
            nxt = max(nxt, c1 + 1)
        if nxt <= col_hi:
            residual.append((k, nxt, col_hi))
    return BandPlan(tuple(tiles), tuple(overlaps), tuple(residual))


def _band(f: list, g: list, lo: int, hi: int, ring, cutover: int, step: int | None) -> tuple[int, list]:
    plan = band_plan(len(f), len(g), lo, hi, step)
    lo, hi = max(lo, 0), min(hi, len(f) + len(g) - 2)
    if lo > hi:
        return (lo, [])
    out = [None] * (hi - lo + 1)
    add, sub, mul = ring.add, ring.sub, ring.mul
    for i0, i1, j0, j1 in plan.tiles:
        _accumulate(out, lo, _full(f[i0:i1], g[j0:j1], ring, cutover), i0 + j0, lo, hi, add)
    for i0, i1, j0, j1 in plan.overlaps:
        _accumulate(out, lo, _full(f[i0:i1], g[j0:j1], ring, cutover), i0 + j0, lo, hi, sub,
                    ring.neg)
    for k, i_lo, i_hi in plan.residual:
        t = mul(f[i_lo], g[k - i_lo])
        for i in range(i_lo + 1, i_hi + 1):
            t = add(t, mul(f[i], g[k - i]))
        cur = out[k - lo]
        out[k - lo] = t if cur is None else add(cur, t)
    zero = ring.zero
    return lo, [zero if v is None else v for v in out]


# -- public API -------------------------------------------------------------

def _wrap(res: tuple[int, list], at: int, ring) -> ShiftedPoly:
    start, vals = res
    return ShiftedPoly(vals, start + at, ring)


def _zero(ring) -> ShiftedPoly:
    return ShiftedPoly((), 0, ring)


def _local(f: ShiftedPoly, g: ShiftedPoly, r: ClipRange):
    """Factor out the input offsets: ``(shift, lo, hi)`` relative to ``x**shift``."""
    at = f.offset + g.offset
    return at, r.lo - at, r.hi - at


def full_product(f: ShiftedPoly, g: ShiftedPoly, ring: RingContract | None = None,
                 kcfg: KaratsubaConfig | None = None) -> ShiftedPoly:
    """Unclipped product by Karatsuba (classical below the cutover)."""
    ring = ring or f.ring
    if f.is_zero() or g.is_zero():
        return _zero(ring)
    kcfg = kcfg or KaratsubaConfig()
    return _wrap(_full(list(f.coeffs), list(g.coeffs), ring, kcfg.cutover), f.offset + g.offset, ring)


def direct_clipped(f, g, r: ClipRange, ring=None, kcfg=None) -> ShiftedPoly:
    """Form the whole product, then clip it."""
    return clip(full_product(f, g, ring, kcfg), r)


def bottom_clipped(f, g, b: int, ring=None, kcfg=None) -> ShiftedPoly:
    """``clip(f*g, [0..b])``: drop input terms above ``b`` before multiplying."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    r = ClipRange(0, b)
    return clip(full_product(clip(f, r), clip(g, r), ring, kcfg), r)


def clipped_from_bottom(f, g, r: ClipRange, ring=None, kcfg=None) -> ShiftedPoly:
    if r.empty:
        return _zero(ring or f.ring)
    return clip(bottom_clipped(f, g, r.hi, ring, kcfg), r)


def top_clipped_via_reverse(f, g, a: int, ring=None, kcfg=None) -> ShiftedPoly:
    """``clip(f*g, [a..deg f + deg g])`` through a bottom product of the reversals."""
    if f.is_zero() or g.is_zero():
        raise ValueError("top clipping via reversal needs nonzero operands")
    top = f.degree + g.degree
    if not 0 <= a <= top:
        raise ValueError(f"a must lie in [0..{top}], got {a}")
    low = bottom_clipped(reverse(f), reverse(g), top - a, ring, kcfg)
    if low.is_zero():
        return low
    # reverse against the requested length; the product's own degree can be smaller
    return shift(reverse(low, top - a), a)


def classical_clipped(f, g, r: ClipRange, ring=None) -> ShiftedPoly:
    """Only the requested column sums, each over its exact convolution window."""
    ring = ring or f.ring
    if r.empty or f.is_zero() or g.is_zero():
        return _zero(ring)
    at, lo, hi = _local(f, g, r)
    return _wrap(_classical(list(f.coeffs), list(g.coeffs), lo, hi, ring), at, ring)


def karatsuba_clipped(f, g, r: ClipRange, ring=None, cfg: KaratsubaConfig | None = None) -> ShiftedPoly:
    """Karatsuba with the clip range pushed down onto the three sub-products."""
    ring = ring or f.ring
    if r.empty or f.is_zero() or g.is_zero():
        return _zero(ring)
    cfg = cfg or KaratsubaConfig()
    at, lo, hi = _local(f, g, r)
    if hi < 0:
        return _zero(ring)
    return _wrap(_kara(list(f.coeffs), list(g.coeffs), max(lo, 0), hi, ring, cfg.cutover), at, ring)


def mulders_short(f, g, n: int, which: str = "bottom", ring=None,
                  cfg: MuldersConfig | None = None, kcfg: KaratsubaConfig | None = None) -> ShiftedPoly:
    """Bottom (or top) ``n`` terms of the product of two length-``n`` series.

    ``which="top"`` returns the terms of degree ``n-1 .. 2n-2``.
    """
    ring = ring or f.ring
    if n < 0:
        raise ValueError("n must be nonnegative")
    if f.degree + 1 > n or g.degree + 1 > n:
        raise ValueError(f"operands must have at most {n} coefficients")
    if which not in ("bottom", "top"):
        raise ValueError("which must be 'bottom' or 'top'")
    if n == 0 or f.is_zero() or g.is_zero():
        return _zero(ring)
    cfg = cfg or MuldersConfig()
    kcfg = kcfg or KaratsubaConfig()
    fd, gd = f.dense(), g.dense()
    if which == "bottom":
        return _wrap(_mulders(fd, gd, n, ring, cfg, kcfg.cutover), 0, ring)
    zero = ring.zero
    rf = (fd + [zero] * (n - len(fd)))[::-1]
    rg = (gd + [zero] * (n - len(gd)))[::-1]
    start, vals = _mulders(rf, rg, n, ring, cfg, kcfg.cutover)
    low = ShiftedPoly(vals, start, ring)
    if low.is_zero():
        return low
    return shift(reverse(low, n - 1), n - 1)


def band_tiled(f, g, r: ClipRange, ring=None, kcfg: KaratsubaConfig | None = None,
               step: int | None = None) -> ShiftedPoly:
    """Cover the band of the tableau feeding ``r`` with square sub-products.

    Tiles of side ``h = width(r)`` sit along the band ``step`` apart (default
    ``ceil(5h/8)``); consecutive tiles overlap and the overlaps are subtracted.
    Band cells no tile reaches are summed classically.
    """
    ring = ring or f.ring
    if r.empty or f.is_zero() or g.is_zero():
        return _zero(ring)
    kcfg = kcfg or KaratsubaConfig()
    at, lo, hi = _local(f, g, r)
    if hi < 0:
        return _zero(ring)
    return _wrap(_band(list(f.coeffs), list(g.coeffs), max(lo, 0), hi, ring, kcfg.cutover, step), at, ring)


# -- operation-count prediction for dense operands ---------------------------

def _tri(n: int) -> int:
    return n * (n + 1) // 2 if n > 0 else 0


def classical_pairs(nf: int, ng: int, a: int, b: int) -> int:
    """Number of tableau cells ``(i, j)`` with ``a <= i + j <= b``."""
    if nf <= 0 or ng <= 0:
        return 0
    a, b = max(a, 0), min(b, nf + ng - 2)
    if a > b:
        return 0

    def below(s):
        return _tri(s + 1) - _tri(s - nf + 1) - _tri(s - ng + 1) + _tri(s - nf - ng + 1)

    return below(b) - below(a - 1)


@lru_cache(maxsize=None)
def predict_karatsuba_muls(nf: int, ng: int, a: int, b: int, cutover: int = 1) -> int:
    """Multiplications ``karatsuba_clipped`` performs on dense operands of
    ``nf`` and ``ng`` coefficients (no cancellation in ``fh + fl``)."""
    if nf <= 0 or ng <= 0:
        return 0
    df, dg = nf - 1, ng - 1
    if a > df + dg or a > b:
        return 0
    a = max(a, 0)
    if min(nf, ng) < cutover:
        return classical_pairs(nf, ng, a, b)
    if b == 0:
        return 1
    p = max(nf, ng)
    p += p % 2
    h = p // 2
    fl, fh = min(nf, h), max(nf - h, 0)
    gl, gh = min(ng, h), max(ng - h, 0)
    if b < h:
        return predict_karatsuba_muls(fl, gl, a, b, cutover)
    if a > 3 * h - 2:
        return predict_karatsuba_muls(fh, gh, a - p, b - p, cutover)
    zha, zhb = _restrict(a - p, p), _restrict(b - p, p)
    zma, zmb = _restrict(a - h, p), _restrict(b - h, p)
    zla, zlb = _restrict(a, p), _restrict(b, p)
    zha, zhb = min(zha, zma), max(zhb, zmb)
    zla, zlb = min(zla, zma), max(zlb, zmb)
    return (predict_karatsuba_muls(fh, gh, zha, zhb, cutover)
            + predict_karatsuba_muls(fl, gl, zla, zlb, cutover)
            + predict_karatsuba_muls(max(fh, fl), max(gh, gl), zma, zmb, cutover))


def predict_full_muls(nf: int, ng: int, cutover: int = 1) -> int:
    return predict_karatsuba_muls(nf, ng, 0, nf + ng - 2, cutover)


@lru_cache(maxsize=None)
def predict_mulders_muls(nf: int, ng: int, n: int, fraction: Fraction = Fraction(7, 10),
                         cutover: int = 1) -> int:
    nf, ng = min(nf, n), min(ng, n)
    if nf <= 0 or ng <= 0 or n <= 0:
        return 0
    if n < cutover:
        return classical_pairs(nf, ng, 0, n - 1)
    k = MuldersConfig(fraction).split(n)
    if k >= n:
        return predict_full_muls(nf, ng, cutover)
    m = n - k
    return (predict_full_muls(min(nf, k), min(ng, k), cutover)
            + predict_mulders_muls(max(nf - k, 0), min(ng, m), m, fraction, cutover)
            + predict_mulders_muls(min(nf, m), max(ng - k, 0), m, fraction, cutover))


def predict_band_muls(nf: int, ng: int, lo: int, hi: int, cutover: int = 1,
                      step: int | None = None) -> int:
    plan = band_plan(nf, ng, lo, hi, step)
    total = sum(predict_full_muls(i1 - i0, j1 - j0, cutover) for i0, i1, j0, j1 in plan.tiles)
    total += sum(predict_full_muls(i1 - i0, j1 - j0, cutover) for i0, i1, j0, j1 in plan.overlaps)
    total += sum(i_hi - i_lo + 1 for _, i_lo, i_hi in plan.residual)
    return total
