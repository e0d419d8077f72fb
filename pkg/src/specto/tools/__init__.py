from .analyze_substitution import analyze_substitution
from .check_equidistribution import check_equidistribution
from .compute_bound import compute_bound
from .estimate_lyapunov_exponent import estimate_lyapunov_exponent
from .reproduce_examples import reproduce_examples

__all__ = [
    "analyze_substitution",
    "check_equidistribution",
    "compute_bound",
    "estimate_lyapunov_exponent",
    "reproduce_examples",
]
