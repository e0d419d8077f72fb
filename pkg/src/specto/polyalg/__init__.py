from .module import (
    cyclotomic,
    has_unit_root,
    is_degenerate,
    minimal_poly_of_root,
    nondegenerate_power,
    ratio_polynomial,
    roots_numeric,
)
from .schema import IntPoly, RootBox

__all__ = [
    "IntPoly",
    "RootBox",
    "cyclotomic",
    "has_unit_root",
    "is_degenerate",
    "minimal_poly_of_root",
    "nondegenerate_power",
    "ratio_polynomial",
    "roots_numeric",
]
