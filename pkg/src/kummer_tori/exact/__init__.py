"""Exact arithmetic core: scalars, linear algebra, exterior algebra, skew forms."""
from .scalars import Quad, as_rational, conj, format_scalar, parse_scalar
from .exterior import ExtElement, WEDGE2_MASKS, contract, iota, iota_inv, pairing, vol
from .skew import (SkewMap4, cayley_residual, invert_skew, is_skew, pfaffian,
                   skew_cayley_check, skew_smith)

__all__ = [
    "Quad", "as_rational", "conj", "format_scalar", "parse_scalar",
    "ExtElement", "WEDGE2_MASKS", "contract", "iota", "iota_inv", "pairing", "vol",
    "SkewMap4", "cayley_residual", "invert_skew", "is_skew", "pfaffian",
    "skew_cayley_check", "skew_smith",
]
