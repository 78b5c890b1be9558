import random

import pytest
from hypothesis import given, settings, strategies as st

from clipprod.clipped_int import (EXACT_POLICY, THEOREM_POLICY, GuardPolicy, bottom_clipped_int, ceil_log,
                                  classical_clipped_int, clipped_int_from_bottom, direct_clipped_int,
                                  full_product_int, guard_digits, karatsuba_clipped_int, within_one_unit)
from clipprod.clipped_poly import KaratsubaConfig
from clipprod.digits import DigitNat, iclip
from clipprod.poly import ClipRange
from clipprod.ring import ZZ, counting_wrap

TINY = KaratsubaConfig(cutover_prec=1)


def nat(x, base=10):
    return DigitNat.from_int(x, base)


def expected(x, y, r, base=10):
    return iclip(nat(x * y, base), r)


def test_ceil_log_is_exact_at_powers():
    assert [ceil_log(n, 10) for n in (1, 2, 9, 10, 11, 100, 101)] == [0, 1, 1, 1, 2, 2, 3]
    assert ceil_log(2**64, 2) == 64 and ceil_log(2**64 + 1, 2) == 65
    with pytest.raises(ValueError):
        ceil_log(0, 10)


def test_guard_digits():
    assert guard_digits(0, 50, 10) == 0
    assert guard_digits(5, 9, 10) == 2
    assert guard_digits(5, 10, 10) == 2
    assert guard_digits(5, 11, 10) == 3
    assert guard_digits(2, 1000, 10) == 2
    assert GuardPolicy().guard(7, 3, 10) == 7
    assert THEOREM_POLICY.guard(7, 3, 10) == 2
    with pytest.raises(ValueError):
        GuardPolicy("loose")


def test_worked_example():
    f, g, r = nat(123456789), nat(987654321), ClipRange(3, 6)
    assert int(classical_clipped_int(f, g, r)) == 2635000
    for fn in (karatsuba_clipped_int, direct_clipped_int, clipped_int_from_bottom):
        assert int(fn(f, g, r)) == 2635000
    v = classical_clipped_int(f, g, r, THEOREM_POLICY)
    assert within_one_unit(expected(123456789, 987654321, r), v, r)


def test_theorem_mode_can_be_one_low():
    # 1077 * 9899 = 10661223; two guard columns miss a carry into position 4
    r = ClipRange(4, 7)
    v = classical_clipped_int(nat(1077), nat(9899), r, THEOREM_POLICY)
    assert int(v) == 10650000
    assert int(classical_clipped_int(nat(1077), nat(9899), r)) == 10660000
    assert within_one_unit(expected(1077, 9899, r), v, r)


def test_carries_respect_bound():
    rnd = random.Random(1)
    for _ in range(300):
        base = rnd.choice((2, 10, 256))
        x, y = rnd.randrange(base**12), rnd.randrange(base**12)
        f, g = nat(x, base), nat(y, base)
        if f.is_zero() or g.is_zero():
            continue
        carries = []
        classical_clipped_int(f, g, ClipRange(0, 30), EXACT_POLICY, carries=carries)
        pg = min(len(f.digits), len(g.digits))
        assert max(carries) <= pg * (base - 1)


def test_base_mismatch_and_zero():
    with pytest.raises(ValueError):
        classical_clipped_int(nat(5, 10), nat(5, 16), ClipRange(0, 1))
    with pytest.raises(ValueError):
        karatsuba_clipped_int(nat(5, 10), nat(5, 16), ClipRange(0, 1))
    with pytest.raises(ValueError):
        bottom_clipped_int(nat(5), nat(5), -1)
    assert classical_clipped_int(nat(0), nat(77), ClipRange(0, 5)).is_zero()
    assert classical_clipped_int(nat(5), nat(5), ClipRange(3, 1)).is_zero()
    assert full_product_int(nat(0), nat(5)).is_zero()


def test_counting_ring_sees_classical_work():
    ring = counting_wrap(ZZ)
    classical_clipped_int(nat(999), nat(99), ClipRange(0, 4), ring=ring)
    assert ring.mul_count == 6


def test_karatsuba_theorem_mode_exhaustive_small():
    """The guard count is also enough when the columns come from Karatsuba:
    every pair below 100 in base 10 and every range inside the first five digits."""
    ranges = [ClipRange(a, b) for a in range(5) for b in range(a, 5)]
    for x in range(100):
        f = nat(x)
        for y in range(100):
            g = nat(y)
            full = nat(x * y)
            for r in ranges:
                e = iclip(full, r)
                v = karatsuba_clipped_int(f, g, r, THEOREM_POLICY, TINY)
                assert within_one_unit(e, v, r), (x, y, r)
                assert v == classical_clipped_int(f, g, r, THEOREM_POLICY)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**60), st.integers(0, 10**60), st.sampled_from([2, 10, 2**16, 2**32]),
       st.integers(0, 40), st.integers(0, 40), st.sampled_from([1, 2, 32]))
def test_property_against_machine_product(x, y, base, a, b, cut):
    r = ClipRange(min(a, b), max(a, b))
    f, g = nat(x, base), nat(y, base)
    want = expected(x, y, r, base)
    kcfg = KaratsubaConfig(cutover_prec=cut)
    assert classical_clipped_int(f, g, r) == want
    assert karatsuba_clipped_int(f, g, r, EXACT_POLICY, kcfg) == want
    assert direct_clipped_int(f, g, r, kcfg) == want
    assert clipped_int_from_bottom(f, g, r, kcfg) == want
    assert int(bottom_clipped_int(f, g, r.hi, kcfg)) == (x * y) % base ** (r.hi + 1)
    for fn in (classical_clipped_int, lambda f, g, r, p: karatsuba_clipped_int(f, g, r, p, kcfg)):
        assert within_one_unit(want, fn(f, g, r, THEOREM_POLICY), r)
