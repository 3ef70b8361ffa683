"""Exact coefficient rings and truncated Laurent series."""

from .rings import (
    ZZ,
    ZZ_z,
    CrankPolyRing,
    CyclotomicInt,
    CyclotomicRing,
    IntegerRing,
    NotAUnitError,
    RingError,
    ZPoly,
    ring_of,
)
from .series import (
    LaurentSeries,
    RingMismatchError,
    TruncationError,
    dissect,
    eval_at_root_of_unity,
    reassemble,
    series_add,
    series_coeff,
    series_inverse,
    series_mul,
    series_shift,
    specialize_z_at_one,
)

__all__ = [
    "ZZ",
    "ZZ_z",
    "CrankPolyRing",
    "CyclotomicInt",
    "CyclotomicRing",
    "IntegerRing",
    "LaurentSeries",
    "NotAUnitError",
    "RingError",
    "RingMismatchError",
    "TruncationError",
    "ZPoly",
    "dissect",
    "eval_at_root_of_unity",
    "reassemble",
    "ring_of",
    "series_add",
    "series_coeff",
    "series_inverse",
    "series_mul",
    "series_shift",
    "specialize_z_at_one",
]
