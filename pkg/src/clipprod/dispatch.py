"""Cost estimates for each clipped-product method and a router that picks the cheapest."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import clipped_int as ci
from . import clipped_poly as cp
from .digits import DigitNat, iprec
from .ring import ZZ
from .poly import ClipRange, ShiftedPoly, clip


class MethodChoice(enum.Enum):
    DIRECT = "direct"
    BOTTOM = "bottom"
    FROM_BOTTOM = "from-bottom"
    TOP_VIA_REVERSE = "top-via-reverse"
    CLASSICAL = "classical"
    KARATSUBA = "karatsuba"
    MULDERS = "mulders"
    BAND_TILED = "band-tiled"

    @classmethod
    def parse(cls, name: str) -> "MethodChoice":
        key = name.strip().lower().replace("_", "-")
        for m in cls:
            if m.value == key:
                return m
        raise ValueError(f"unknown method {name!r}; choose from {', '.join(m.value for m in cls)}")


@dataclass(frozen=True)
class CostModel:
    """Estimates count coefficient multiplications; the O(b) and O(b-a)
    clipping terms of the straightforward methods cost 1 per coefficient."""

    classical_to_karatsuba: int = cp.DEFAULT_CUTOVER
    mulders_fraction: Fraction = Fraction(7, 10)
    band_step: int | None = None

    def __post_init__(self):
        if self.classical_to_karatsuba < 1:
            raise ValueError("classical_to_karatsuba must be at least 1")
        object.__setattr__(self, "mulders_fraction", cp.MuldersConfig(self.mulders_fraction).fraction)

    def multiply(self, n: int, m: int) -> int:
        """M(n, m): a full product at this model's cutover."""
        return cp.predict_full_muls(n, m, self.classical_to_karatsuba)


def product_top(n: int, m: int, kind: str = "poly") -> int:
    """Highest position a product of sizes n and m can occupy."""
    return n + m - 1 if kind == "int" else n + m - 2


def applicable(method: MethodChoice, n: int, m: int, r: ClipRange, kind: str = "poly") -> bool:
    if method is MethodChoice.BOTTOM:
        return r.lo == 0
    if method is MethodChoice.TOP_VIA_REVERSE:
        # carries make reversal meaningless for integers
        return kind == "poly" and r.hi >= n + m - 2
    return True


def estimate(model: CostModel, method: MethodChoice, n: int, m: int, r: ClipRange,
             kind: str = "poly", guard: int = 0) -> int:
    """Estimated coefficient multiplications (plus clipping overhead).

    ``guard`` widens the computed range below ``r.lo`` for integer products.
    """
    if not isinstance(method, MethodChoice):
        raise ValueError(f"unknown method {method!r}")
    if n < 1 or m < 1:
        raise ValueError("operand sizes must be positive")
    if not applicable(method, n, m, r, kind):
        raise ValueError(f"{method.value} does not apply to range {r} of a {n}x{m} {kind} product")
    top = product_top(n, m, kind)
    a, b = r.lo, min(r.hi, top)
    if r.empty or a > top:
        return 0
    lo = a - guard
    cut = model.classical_to_karatsuba

    def bottom(hi):
        return model.multiply(min(n, hi + 1), min(m, hi + 1))

    if method is MethodChoice.DIRECT:
        return model.multiply(n, m) + (b - a + 1)
    if method is MethodChoice.BOTTOM:
        return bottom(b) + (b + 1)
    if method is MethodChoice.FROM_BOTTOM:
        return bottom(b) + (b - a + 1)
    if method is MethodChoice.TOP_VIA_REVERSE:
        return bottom(top - a) + (top - a + 1)
    if method is MethodChoice.CLASSICAL:
        return cp.classical_pairs(n, m, lo, b)
    if method is MethodChoice.KARATSUBA:
        return cp.predict_karatsuba_muls(n, m, lo, b, cut)
    if method is MethodChoice.MULDERS:
        return cp.predict_mulders_muls(min(n, b + 1), min(m, b + 1), b + 1, model.mulders_fraction, cut)
    return cp.predict_band_muls(n, m, lo, b, cut, model.band_step)


def clip_overhead(method: MethodChoice, n: int, m: int, r: ClipRange, kind: str = "poly") -> int:
    """The per-coefficient clipping term included in :func:`estimate`."""
    top = product_top(n, m, kind)
    a, b = r.lo, min(r.hi, top)
    if r.empty or a > top:
        return 0
    if method is MethodChoice.DIRECT or method is MethodChoice.FROM_BOTTOM:
        return b - a + 1
    if method is MethodChoice.BOTTOM:
        return b + 1
    if method is MethodChoice.TOP_VIA_REVERSE:
        return top - a + 1
    return 0


def predict_muls(model: CostModel, method: MethodChoice, n: int, m: int, r: ClipRange,
                 kind: str = "poly", guard: int = 0) -> int:
    """Coefficient multiplications only; matches measured counts for generic dense operands."""
    return estimate(model, method, n, m, r, kind, guard) - clip_overhead(method, n, m, r, kind)


def choose(model: CostModel, n: int, m: int, r: ClipRange, kind: str = "poly", guard: int = 0) -> MethodChoice:
    """Cheapest applicable method; ties go to the earlier enum member."""
    best, best_cost = None, None
    for method in MethodChoice:
        if not applicable(method, n, m, r, kind):
            continue
        cost = estimate(model, method, n, m, r, kind, guard)
        if best_cost is None or cost < best_cost:
            best, best_cost = method, cost
    return best


@dataclass(frozen=True)
class Settings:
    """Tunables, loadable from a ``key=value`` file."""

    classical_to_karatsuba: int = cp.DEFAULT_CUTOVER
    mulders_fraction: Fraction = Fraction(7, 10)
    guard: str = ci.EXACT
    base: int = 10
    band_step: int | None = None

    def cost_model(self) -> CostModel:
        return CostModel(self.classical_to_karatsuba, self.mulders_fraction, self.band_step)

    def karatsuba(self, count_mode: bool = False) -> cp.KaratsubaConfig:
        return cp.KaratsubaConfig(self.classical_to_karatsuba, count_mode)

    def mulders(self) -> cp.MuldersConfig:
        return cp.MuldersConfig(self.mulders_fraction)

    def policy(self) -> ci.GuardPolicy:
        return ci.GuardPolicy(self.guard)


_SETTING_TYPES = {
    "classical_to_karatsuba": int,
    "mulders_fraction": Fraction,
    "guard": str,
    "base": int,
    "band_step": int,
}


def parse_settings(text: str) -> Settings:
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in _SETTING_TYPES:
            raise ValueError(f"line {lineno}: expected one of {sorted(_SETTING_TYPES)} as key=value")
        values[key] = _SETTING_TYPES[key](value)
    settings = Settings(**values)
    # validate eagerly
    settings.cost_model()
    settings.policy()
    if settings.base < 2:
        raise ValueError("base must be at least 2")
    return settings


def load_settings(path: str | Path) -> Settings:
    return parse_settings(Path(path).read_text())


def _poly_method(method: MethodChoice, f, g, r, ring, kcfg, mcfg, step):
    if method is MethodChoice.DIRECT:
        return cp.direct_clipped(f, g, r, ring, kcfg)
    if method is MethodChoice.BOTTOM:
        return cp.bottom_clipped(f, g, r.hi, ring, kcfg)
    if method is MethodChoice.FROM_BOTTOM:
        return cp.clipped_from_bottom(f, g, r, ring, kcfg)
    if method is MethodChoice.TOP_VIA_REVERSE:
        return clip(cp.top_clipped_via_reverse(f, g, r.lo, ring, kcfg), r)
    if method is MethodChoice.CLASSICAL:
        return cp.classical_clipped(f, g, r, ring)
    if method is MethodChoice.KARATSUBA:
        return cp.karatsuba_clipped(f, g, r, ring, kcfg)
    if method is MethodChoice.MULDERS:
        prefix = ClipRange(0, r.hi)
        return clip(cp.mulders_short(clip(f, prefix), clip(g, prefix), r.hi + 1, "bottom", ring, mcfg, kcfg), r)
    return cp.band_tiled(f, g, r, ring, kcfg, step)


def _int_method(method: MethodChoice, f, g, r, ring, kcfg, mcfg, step, policy):
    if method is MethodChoice.DIRECT:
        return ci.direct_clipped_int(f, g, r, kcfg, ring)
    if method is MethodChoice.BOTTOM:
        return ci.bottom_clipped_int(f, g, r.hi, kcfg, ring)
    if method is MethodChoice.FROM_BOTTOM:
        return ci.clipped_int_from_bottom(f, g, r, kcfg, ring)
    if method is MethodChoice.CLASSICAL:
        return ci.classical_clipped_int(f, g, r, policy, ring)
    if method is MethodChoice.KARATSUBA:
        return ci.karatsuba_clipped_int(f, g, r, policy, kcfg, ring)

    def poly(fp, gp, rr):
        return _poly_method(method, fp, gp, rr, ring, kcfg, mcfg, step)

    return ci.via_poly_method(f, g, r, poly, policy)


def clipped_product(f, g, r: ClipRange, settings: Settings | None = None,
                    method: MethodChoice | None = None, ring=None,
                    kcfg: cp.KaratsubaConfig | None = None):
    """Clipped product of two polynomials or two digit integers.

    Routes through :func:`choose` unless ``method`` is given.  Returns a
    value of the same kind as the operands.
    """
    settings = settings or Settings()
    model = settings.cost_model()
    kcfg = kcfg or settings.karatsuba()
    mcfg = settings.mulders()
    if isinstance(f, ShiftedPoly) and isinstance(g, ShiftedPoly):
        ring = ring or f.ring
        if r.empty or f.is_zero() or g.is_zero():
            return ShiftedPoly((), 0, ring)
        n, m = f.degree + 1, g.degree + 1
        if r.lo > product_top(n, m):
            return ShiftedPoly((), 0, ring)
        method = method or choose(model, n, m, r)
        if not applicable(method, n, m, r):
            raise ValueError(f"{method.value} does not apply to range {r}")
        return _poly_method(method, f, g, r, ring, kcfg, mcfg, model.band_step)
    if isinstance(f, DigitNat) and isinstance(g, DigitNat):
        if f.base != g.base:
            raise ValueError(f"base mismatch: {f.base} vs {g.base}")
        ring = ring or ZZ
        policy = settings.policy()
        if r.empty or f.is_zero() or g.is_zero():
            return DigitNat(f.base)
        n, m = iprec(f), iprec(g)
        if r.lo > product_top(n, m, "int"):
            return DigitNat(f.base)
        guard = policy.guard(r.lo, min(n, m), f.base)
        method = method or choose(model, n, m, r, "int", guard)
        if not applicable(method, n, m, r, "int"):
            raise ValueError(f"{method.value} does not apply to integer range {r}")
        return _int_method(method, f, g, r, ring, kcfg, mcfg, model.band_step, policy)
    raise TypeError("operands must both be ShiftedPoly or both be DigitNat")
