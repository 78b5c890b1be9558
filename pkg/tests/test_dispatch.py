import random
from fractions import Fraction

import pytest

from clipprod import reference as ref
from clipprod.clipped_poly import KaratsubaConfig, predict_full_muls
from clipprod.digits import DigitNat, iclip
from clipprod.dispatch import (CostModel, MethodChoice, Settings, applicable, choose, clip_overhead,
                               clipped_product, estimate, load_settings, parse_settings, predict_muls)
from clipprod.poly import ClipRange, ShiftedPoly, clip, oracle_full_product
from clipprod.ring import ZZ, counting_wrap
from clipprod.clipped_int import within_one_unit

MODEL = CostModel()


def test_classical_estimate_example():
    assert estimate(MODEL, MethodChoice.CLASSICAL, 8, 5, ClipRange(5, 7)) == 15


def test_empty_range_costs_nothing():
    for r in (ClipRange(4, 3), ClipRange(50, 60)):
        for m in MethodChoice:
            if applicable(m, 8, 5, r):
                assert estimate(MODEL, m, 8, 5, r) == 0


def test_estimate_errors():
    with pytest.raises(ValueError):
        estimate(MODEL, "classical", 8, 5, ClipRange(0, 3))
    with pytest.raises(ValueError):
        estimate(MODEL, MethodChoice.CLASSICAL, 0, 5, ClipRange(0, 3))
    with pytest.raises(ValueError):
        estimate(MODEL, MethodChoice.BOTTOM, 8, 5, ClipRange(1, 3))
    with pytest.raises(ValueError):
        estimate(MODEL, MethodChoice.TOP_VIA_REVERSE, 8, 5, ClipRange(1, 3))
    with pytest.raises(ValueError):
        estimate(MODEL, MethodChoice.TOP_VIA_REVERSE, 8, 5, ClipRange(3, 11), kind="int")


def test_method_names():
    assert MethodChoice.parse("band_tiled") is MethodChoice.BAND_TILED
    assert MethodChoice.parse("Top-Via-Reverse") is MethodChoice.TOP_VIA_REVERSE
    with pytest.raises(ValueError):
        MethodChoice.parse("fft")


def test_cost_model_validation():
    with pytest.raises(ValueError):
        CostModel(classical_to_karatsuba=0)
    with pytest.raises(ValueError):
        CostModel(mulders_fraction=Fraction(1, 3))
    with pytest.raises(Exception):
        MODEL.classical_to_karatsuba = 4


def test_choose_examples():
    for a in range(7):
        for b in range(a, 7):
            assert choose(MODEL, 4, 4, ClipRange(a, b)) is MethodChoice.CLASSICAL
    mid = choose(MODEL, 4096, 4096, ClipRange(4091, 4098))
    assert mid in (MethodChoice.CLASSICAL, MethodChoice.BAND_TILED)
    assert choose(MODEL, 1024, 1024, ClipRange(0, 1023)) in (MethodChoice.MULDERS, MethodChoice.FROM_BOTTOM)
    assert choose(MODEL, 1024, 1024, ClipRange(0, 1023)) == choose(CostModel(), 1024, 1024, ClipRange(0, 1023))


def test_tie_break_follows_enum_order():
    # below the cutover Karatsuba degenerates to classical with an equal estimate
    r = ClipRange(2, 5)
    assert estimate(MODEL, MethodChoice.CLASSICAL, 6, 6, r) == estimate(MODEL, MethodChoice.KARATSUBA, 6, 6, r)
    assert choose(MODEL, 6, 6, r) is MethodChoice.CLASSICAL


def test_estimates_match_measured_counts():
    rnd = random.Random(3)
    for _ in range(40):
        n, m = rnd.randint(1, 90), rnd.randint(1, 90)
        f = ShiftedPoly([rnd.randint(1, 10**6) for _ in range(n)])
        g = ShiftedPoly([rnd.randint(1, 10**6) for _ in range(m)])
        top = n + m - 2
        a = rnd.randint(0, top)
        r = ClipRange(a, rnd.randint(a, top))
        model = CostModel(classical_to_karatsuba=rnd.choice((1, 4, 32)))
        settings = Settings(classical_to_karatsuba=model.classical_to_karatsuba)
        for method in MethodChoice:
            if not applicable(method, n, m, r):
                continue
            ring = counting_wrap(ZZ)
            clipped_product(f, g, r, settings, method, ring)
            assert ring.mul_count == predict_muls(model, method, n, m, r), method
            assert estimate(model, method, n, m, r) == ring.mul_count + clip_overhead(method, n, m, r)


def test_classical_estimate_is_exact_inside_middle_columns():
    rnd = random.Random(4)
    for _ in range(100):
        n, m = rnd.randint(1, 30), rnd.randint(1, 30)
        lo, hi = min(n, m) - 1, max(n, m) - 1
        a = rnd.randint(lo, hi)
        b = rnd.randint(a, hi)
        assert estimate(MODEL, MethodChoice.CLASSICAL, n, m, ClipRange(a, b)) == (b - a + 1) * min(n, m)


def test_monotone_estimates_for_direct_classical_karatsuba():
    rnd = random.Random(5)
    for _ in range(500):
        n, m = rnd.randint(1, 150), rnd.randint(1, 150)
        top = n + m - 2
        a, b = sorted((rnd.randint(0, top), rnd.randint(0, top)))
        a2, b2 = rnd.randint(0, a), rnd.randint(b, top)
        for method in (MethodChoice.DIRECT, MethodChoice.CLASSICAL, MethodChoice.KARATSUBA):
            inner = estimate(MODEL, method, n, m, ClipRange(a, b))
            assert inner <= estimate(MODEL, method, n, m, ClipRange(a2, b2)), (method, n, m, a, b, a2, b2)


def test_full_product_count_is_not_monotone():
    # why methods built on a full product are not monotone in the range
    assert predict_full_muls(49, 118, 32) > predict_full_muls(49, 136, 32)


def test_facade_reference_examples():
    f, g = ref.EXAMPLE_F, ref.EXAMPLE_G
    assert clipped_product(f, g, ClipRange(2, 3)) == ref.EXAMPLE_CLIP_2_3
    for method in MethodChoice:
        if applicable(method, 4, 6, ClipRange(2, 3)):
            assert clipped_product(f, g, ClipRange(2, 3), method=method) == ref.EXAMPLE_CLIP_2_3
    x, y = DigitNat.from_int(123456789, 10), DigitNat.from_int(987654321, 10)
    assert int(clipped_product(x, y, ClipRange(3, 6))) == 2635000


def test_facade_routes_never_change_value():
    rnd = random.Random(6)
    for _ in range(150):
        n, m = rnd.randint(1, 50), rnd.randint(1, 50)
        f = ShiftedPoly([rnd.randint(-99, 99) for _ in range(n)], rnd.randint(0, 3))
        g = ShiftedPoly([rnd.randint(-99, 99) for _ in range(m)])
        a = rnd.randint(0, n + m + 3)
        r = ClipRange(a, rnd.randint(a - 1, n + m + 5))
        want = clip(oracle_full_product(f, g), r)
        settings = Settings(classical_to_karatsuba=rnd.choice((2, 32)))
        assert clipped_product(f, g, r, settings) == want
        for method in MethodChoice:
            pn, pm = max(1, f.degree + 1), max(1, g.degree + 1)
            if applicable(method, pn, pm, r):
                assert clipped_product(f, g, r, settings, method) == want

        base = rnd.choice((10, 2**16))
        x, y = rnd.randrange(base**n), rnd.randrange(base**m)
        fi, gi = DigitNat.from_int(x, base), DigitNat.from_int(y, base)
        want = iclip(DigitNat.from_int(x * y, base), r)
        for guard in ("exact", "theorem"):
            s = Settings(guard=guard, classical_to_karatsuba=settings.classical_to_karatsuba)
            got = clipped_product(fi, gi, r, s)
            assert got == want if guard == "exact" else within_one_unit(want, got, r)
            for method in MethodChoice:
                if applicable(method, 1, 1, r, "int"):
                    got = clipped_product(fi, gi, r, s, method)
                    assert got == want if guard == "exact" else within_one_unit(want, got, r)


def test_facade_errors():
    f = ShiftedPoly([1, 2])
    with pytest.raises(TypeError):
        clipped_product(f, DigitNat.from_int(3, 10), ClipRange(0, 1))
    with pytest.raises(ValueError):
        clipped_product(DigitNat.from_int(3, 10), DigitNat.from_int(3, 16), ClipRange(0, 1))
    with pytest.raises(ValueError):
        clipped_product(f, f, ClipRange(1, 2), method=MethodChoice.BOTTOM)
    with pytest.raises(ValueError):
        x = DigitNat.from_int(35, 10)
        clipped_product(x, x, ClipRange(0, 3), method=MethodChoice.TOP_VIA_REVERSE)


def test_settings_file(tmp_path):
    path = tmp_path / "clip.conf"
    path.write_text("# tuning\nclassical_to_karatsuba = 16\nmulders_fraction=3/4\nguard=theorem\nbase=100\n")
    s = load_settings(path)
    assert s == Settings(16, Fraction(3, 4), "theorem", 100)
    assert s.cost_model() == CostModel(16, Fraction(3, 4))
    assert s.karatsuba() == KaratsubaConfig(16)
    assert s.policy().mode == "theorem"
    for bad in ("cutover=4", "base=1", "guard=sloppy", "mulders_fraction=0.4", "noequals"):
        with pytest.raises(ValueError):
            parse_settings(bad)
