from .const import BoundMethod
from .laurent import ClearingFactor, LaurentPoly
from .majorant import family_majorant
from .module import (
    best_cleared_bound,
    cleared_constant_term,
    cleared_jensen_bound,
    cleared_polynomial,
    detect_geometric_runs,
    entry_polynomial,
    gram_constant_term,
    gram_polynomial,
    jensen_bound,
    mahler_midpoint,
    majorant_bound,
    merge_clearings,
    quadrature_bound,
    quadrature_log_norm,
    symbol_for_power,
)
from .schema import BoundCertificate

__all__ = [
    "BoundCertificate",
    "BoundMethod",
    "ClearingFactor",
    "LaurentPoly",
    "best_cleared_bound",
    "cleared_constant_term",
    "cleared_jensen_bound",
    "cleared_polynomial",
    "detect_geometric_runs",
    "entry_polynomial",
    "family_majorant",
    "gram_constant_term",
    "gram_polynomial",
    "jensen_bound",
    "mahler_midpoint",
    "majorant_bound",
    "merge_clearings",
    "quadrature_bound",
    "quadrature_log_norm",
    "symbol_for_power",
]
