from .const import Aperiodicity, FamilyTag
from .module import (
    aperiodicity_gate,
    check_primitive,
    make_family,
    power,
    substitution_matrix,
)
from .parsing import parse_substitution
from .schema import FamilyParams, Substitution

__all__ = [
    "Aperiodicity",
    "FamilyParams",
    "FamilyTag",
    "Substitution",
    "aperiodicity_gate",
    "check_primitive",
    "make_family",
    "parse_substitution",
    "power",
    "substitution_matrix",
]
