"""Reference example operands and values used by ``selftest`` and the tests."""

from .poly import ShiftedPoly
from .ring import MatrixRing

# f = 4x^3 + 83x^2 + 10x - 62, g = 82x^5 - 80x^4 + 44x^3 - 71x^2 + 17x + 75
EXAMPLE_F = ShiftedPoly([-62, 10, 83, 4])
EXAMPLE_G = ShiftedPoly([75, 17, -71, 44, -80, 82])
EXAMPLE_PRODUCT = ShiftedPoly([-4650, -304, 10797, -1727, -425, -2516, -5644, 6486, 328])
EXAMPLE_CLIP_2_3 = ShiftedPoly([10797, -1727], 2)
EXAMPLE_BOTTOM_3_FULL = ShiftedPoly([-4650, -304, 10797, -1727, -5385, 3368, 176])
EXAMPLE_BOTTOM_3 = ShiftedPoly([-4650, -304, 10797, -1727])
EXAMPLE_REVERSED_BOTTOM = ShiftedPoly([328, 6486, -5644])
EXAMPLE_TOP_6 = ShiftedPoly([-5644, 6486, 328], 6)

INT_EXAMPLE = 504132231405
INT_EXAMPLE_BASE = 100
INT_EXAMPLE_CLIP_2_4 = 4132230000

# Karatsuba multiplication counts for prec-16 operands, cell (a, b) with a <= b.
# Rows a <= 15 depend only on b; rows a >= 16 depend only on a.
TABLE2_PREFIX_COLUMNS = (1, 3, 5, 9, 11, 15, 19, 27, 29, 33, 37, 45, 49, 56, 64) + (80,) * 16
TABLE2_SUFFIX_ROWS = (64, 56, 48, 44, 36, 32, 28, 26, 18, 14, 10, 8, 4, 3, 1)


def table2_cell(a: int, b: int) -> int:
    if not 0 <= a <= b <= 30:
        raise ValueError(f"no reference cell ({a}, {b})")
    return TABLE2_PREFIX_COLUMNS[b] if a <= 15 else TABLE2_SUFFIX_ROWS[a - 16]


MATRIX_RING = MatrixRing(2)

# Operands that generated the reference counts; f has no x^13 term.
_TABLE2_F = {
    15: ((-89, 56), (-96, 72)), 14: ((-8, 64), (-32, 61)), 12: ((45, 66), (69, 76)),
    11: ((-96, 47), (15, -85)), 10: ((-96, 62), (-74, -65)), 9: ((-92, 54), (-18, -64)),
    8: ((-56, -28), (56, -8)), 7: ((23, -31), (-85, 94)), 6: ((-45, -58), (73, -70)),
    5: ((-6, -7), (72, 4)), 4: ((-64, 61), (10, 45)), 3: ((-29, -43), (-95, 16)),
    2: ((31, -9), (-42, 28)), 1: ((-52, -87), (-51, -27)), 0: ((-48, -33), (-55, -22)),
}
_TABLE2_G = {
    15: ((1, 75), (7, -15)), 14: ((-22, 43), (85, 25)), 13: ((-29, -90), (-38, 3)),
    12: ((39, -92), (0, 18)), 11: ((56, 41), (-53, 6)), 10: ((-10, 53), (-8, 83)),
    9: ((58, -98), (61, 1)), 8: ((-28, 7), (17, 36)), 7: ((-64, 16), (-58, 64)),
    6: ((-76, -66), (83, 76)), 5: ((6, 3), (34, 8)), 4: ((-80, -71), (-15, 88)),
    3: ((-9, -83), (77, 28)), 2: ((59, -28), (48, 94)), 1: ((40, -91), (-34, 32)),
    0: ((8, 39), (9, -28)),
}
TABLE2_F = ShiftedPoly.from_dict(_TABLE2_F, MATRIX_RING)
TABLE2_G = ShiftedPoly.from_dict(_TABLE2_G, MATRIX_RING)

# deg f = 7, deg g = 4, range [5..7]: (multiplications, additions)
CLASSICAL_EXAMPLE_SHAPE = (8, 5, 5, 7)
CLASSICAL_EXAMPLE_COUNTS = (15, 12)
FROM_BOTTOM_EXAMPLE_COUNTS = (40, 28)
