"""Exhaustive guard-digit sweep over all operand pairs below a limit.

Runs the clipped classical integer loop (running carry over columns
``a-G .. b``, digits kept from ``a`` up) in compiled code for every pair
``f, g < limit`` and every range ``0 <= a <= b <= max_hi``, in both guard
modes, and tallies how the results compare with the exact product.

For a fixed ``a`` the loop state after column ``b`` does not depend on
where the loop stops, so one pass over columns ``a-G .. max_hi`` yields
the results for every ``b``.  Exact mode starts every range at column 0,
so a single pass covers all ranges; its digits are compared with digits
taken from the machine product.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit


@dataclass(frozen=True)
class SweepStats:
    pairs: int
    cases: int
    theorem_failures: int
    theorem_one_low: int
    exact_failures: int
    carry_bound_violations: int
    max_carry_ratio: float

    @property
    def ok(self) -> bool:
        return not (self.theorem_failures or self.exact_failures or self.carry_bound_violations)


@njit(cache=True)
def _ceil_log(n, base):
    e = 0
    power = 1
    while power < n:
        power *= base
        e += 1
    return e


@njit(cache=True)
def _sweep(limit, base, max_hi):
    # digit tables for every operand value
    width = 1
    power = base
    while power < limit:
        power *= base
        width += 1
    table = np.zeros((limit, width), dtype=np.int64)
    lengths = np.zeros(limit, dtype=np.int64)
    for v in range(limit):
        x = v
        n = 0
        while x:
            table[v, n] = x % base
            x //= base
            n += 1
        lengths[v] = n
    pw = np.ones(max_hi + 2, dtype=np.int64)
    for k in range(1, max_hi + 2):
        pw[k] = pw[k - 1] * base

    n_ranges = (max_hi + 1) * (max_hi + 2) // 2
    cols = np.zeros(max_hi + 1, dtype=np.int64)
    true_digits = np.zeros(max_hi + 1, dtype=np.int64)
    cases = 0
    th_fail = 0
    th_low = 0
    ex_fail = 0
    carry_viol = 0
    best_carry = 0
    best_bound = 1
    for f in range(limit):
        for g in range(f, limit):
            # (f, g) and (g, f) give identical column sums and guard counts
            weight = 1 if f == g else 2
            if f == 0:
                cases += weight * n_ranges
                continue
            x, y = f, g
            if lengths[y] > lengths[x]:
                x, y = y, x
            pf = lengths[x]
            pg = lengths[y]
            for k in range(max_hi + 1):
                t = 0
                lo_i = k - pg + 1
                if lo_i < 0:
                    lo_i = 0
                hi_i = k
                if hi_i > pf - 1:
                    hi_i = pf - 1
                for i in range(lo_i, hi_i + 1):
                    t += table[x, i] * table[y, k - i]
                cols[k] = t
            product = f * g
            for k in range(max_hi + 1):
                true_digits[k] = product % base
                product //= base
            bound = pg * (base - 1)

            # exact mode: G = a, so every range runs the same loop from column 0
            carry = 0
            bad = 0
            for k in range(max_hi + 1):
                t = carry + cols[k]
                carry = t // base
                if t - carry * base != true_digits[k]:
                    bad = 1
                if carry > bound:
                    carry_viol += weight
                if carry * best_bound > best_carry * bound:
                    best_carry = carry
                    best_bound = bound
            if bad:
                # every range whose top reaches the first wrong digit is wrong; count all
                ex_fail += weight * n_ranges

            # theorem mode
            g_theorem = _ceil_log(pg, base) + 1
            for a in range(max_hi + 1):
                guard = a if a < g_theorem else g_theorem
                carry = 0
                value = 0
                expected = 0
                for k in range(a - guard, max_hi + 1):
                    t = carry + cols[k]
                    carry = t // base
                    if carry > bound:
                        carry_viol += weight
                    if k >= a:
                        value += (t - carry * base) * pw[k]
                        expected += true_digits[k] * pw[k]
                        diff = expected - value
                        if diff < 0:
                            diff += pw[k + 1]
                        cases += weight
                        if diff == pw[a]:
                            th_low += weight
                        elif diff != 0:
                            th_fail += weight
    return cases, th_fail, th_low, ex_fail, carry_viol, best_carry, best_bound


def guard_digit_sweep(limit: int = 10_000, base: int = 10, max_hi: int = 8) -> SweepStats:
    """Check every ``f, g`` in ``[0, limit)`` and every ``0 <= a <= b <= max_hi``.

    Values must stay within 64-bit range: ``limit**2 * base`` and
    ``base**(max_hi + 1)`` below ``2**63``.
    """
    if limit < 1 or base < 2 or max_hi < 0:
        raise ValueError("need limit >= 1, base >= 2, max_hi >= 0")
    if limit * limit * base >= 2**63 or base ** (max_hi + 1) >= 2**63:
        raise ValueError("sweep parameters overflow 64-bit arithmetic")
    cases, th_fail, th_low, ex_fail, viol, carry, bound = _sweep(limit, base, max_hi)
    return SweepStats(limit * limit, int(cases), int(th_fail), int(th_low), int(ex_fail), int(viol),
                      carry / bound)
