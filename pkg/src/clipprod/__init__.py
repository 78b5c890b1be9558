"""Clipped products: selected terms of a polynomial product or digits of an integer product."""

from .clipped_int import (EXACT, EXACT_POLICY, THEOREM, THEOREM_POLICY, GuardPolicy,
                          bottom_clipped_int, classical_clipped_int, clipped_int_from_bottom,
                          direct_clipped_int, full_product_int, guard_digits, karatsuba_clipped_int)
from .clipped_poly import (COUNT_MODE, KaratsubaConfig, MuldersConfig, band_tiled, bottom_clipped,
                           classical_clipped, clipped_from_bottom, direct_clipped, full_product,
                           karatsuba_clipped, mulders_short, top_clipped_via_reverse)
from .digits import DigitNat, iclip, icoeff, iprec, normalize, oracle_int_product
from .dispatch import CostModel, MethodChoice, Settings, choose, clipped_product, estimate, load_settings
from .poly import (ClipRange, ShiftedPoly, clip, coeff, format_poly, oracle_full_product, parse_poly,
                   prec, reverse, shift)
from .ring import ZZ, CountingRing, IntegerRing, MatrixRing, OpCount, counting_wrap

__version__ = "0.1.0"
