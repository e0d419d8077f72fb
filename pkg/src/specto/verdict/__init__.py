from .const import ActionKind, Decision
from .module import analyze_r_action, analyze_z_action, essential_subspace, pf_kernel_subspace, pf_vector_enclosure
from .schema import AnalysisOptions, ChiBound, ConditionRecord, PFKernel, SingularityCertificate

__all__ = [
    "ActionKind",
    "AnalysisOptions",
    "ChiBound",
    "ConditionRecord",
    "Decision",
    "PFKernel",
    "SingularityCertificate",
    "analyze_r_action",
    "analyze_z_action",
    "essential_subspace",
    "pf_kernel_subspace",
    "pf_vector_enclosure",
]
