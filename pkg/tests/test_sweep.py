import pytest

from clipprod.clipped_int import EXACT_POLICY, THEOREM_POLICY, classical_clipped_int
from clipprod.digits import DigitNat, iclip
from clipprod.poly import ClipRange
from clipprod.sweep import guard_digit_sweep


def _python_sweep(limit, base, max_hi):
    """Same tallies as the compiled sweep, from the library's own integer routine."""
    ranges = [ClipRange(a, b) for a in range(max_hi + 1) for b in range(a, max_hi + 1)]
    cases = th_fail = th_low = ex_fail = 0
    ratio = 0.0
    for x in range(limit):
        f = DigitNat.from_int(x, base)
        for y in range(limit):
            g = DigitNat.from_int(y, base)
            full = DigitNat.from_int(x * y, base)
            for r in ranges:
                e = iclip(full, r)
                v = classical_clipped_int(f, g, r, THEOREM_POLICY)
                diff = (int(e) - int(v)) % base ** (r.hi + 1)
                cases += 1
                th_low += diff == base ** r.lo
                th_fail += diff not in (0, base ** r.lo)
                ex_fail += classical_clipped_int(f, g, r, EXACT_POLICY) != e
            if x and y:
                carries = []
                classical_clipped_int(f, g, ClipRange(0, max_hi), EXACT_POLICY, carries=carries)
                bound = min(len(f.digits), len(g.digits)) * (base - 1)
                ratio = max(ratio, max(carries) / bound)
    return cases, th_fail, th_low, ex_fail, ratio


@pytest.mark.parametrize("limit,base,max_hi", [(40, 10, 4), (16, 2, 6), (27, 3, 5)])
def test_compiled_sweep_matches_python(limit, base, max_hi):
    stats = guard_digit_sweep(limit, base, max_hi)
    cases, th_fail, th_low, ex_fail, ratio = _python_sweep(limit, base, max_hi)
    assert stats.pairs == limit * limit
    assert stats.cases == cases
    assert stats.theorem_failures == th_fail == 0
    assert stats.theorem_one_low == th_low > 0
    assert stats.exact_failures == ex_fail == 0
    assert stats.carry_bound_violations == 0
    assert stats.max_carry_ratio == pytest.approx(ratio)
    assert stats.ok


def test_sweep_rejects_overflowing_parameters():
    with pytest.raises(ValueError):
        guard_digit_sweep(2**32, 10, 4)
    with pytest.raises(ValueError):
        guard_digit_sweep(10, 10, 30)
    with pytest.raises(ValueError):
        guard_digit_sweep(0, 10, 4)
