from .fixed_point import bits_per_step, check_precision, random_point, required_precision_bits, working_precision
from .module import attach_bounds, mc_exponent, pointwise_upper_exponent, renormalized_product
from .schema import FixedPointTorusPoint, LyapunovEstimate

__all__ = [
    "FixedPointTorusPoint",
    "LyapunovEstimate",
    "attach_bounds",
    "bits_per_step",
    "check_precision",
    "mc_exponent",
    "pointwise_upper_exponent",
    "random_point",
    "renormalized_product",
    "required_precision_bits",
    "working_precision",
]
