from .const import FailedCondition
from .module import (
    degenerate_witness,
    hit_frequency,
    multiplicity_diagnostic,
    orbit_mod1,
    subsample,
    ud_conditions,
    ud_experiment,
    unit_root_witness,
    weyl_sums,
)
from .schema import EmpiricalUD, OmegaSample, RecurrenceSeq, UDVerdict, Witness

__all__ = [
    "EmpiricalUD",
    "FailedCondition",
    "OmegaSample",
    "RecurrenceSeq",
    "UDVerdict",
    "Witness",
    "degenerate_witness",
    "hit_frequency",
    "multiplicity_diagnostic",
    "orbit_mod1",
    "subsample",
    "ud_conditions",
    "ud_experiment",
    "unit_root_witness",
    "weyl_sums",
]
