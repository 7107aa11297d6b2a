"""Fair allocation of indivisible chores and goods with minimum subsidies."""
from .core import (
    Allocation,
    CutSequence,
    FairDivisionError,
    FracAllocation,
    Instance,
    Mode,
    SubsidyVector,
    bundle_value,
    proportional_share,
    validate_instance,
)
from .pipeline import Algorithm, solve, solve_prop, theorem_bound
from .verify import fairness_report, min_subsidy_vector

__all__ = [
    "Algorithm",
    "Allocation",
    "CutSequence",
    "FairDivisionError",
    "FracAllocation",
    "Instance",
    "Mode",
    "SubsidyVector",
    "bundle_value",
    "fairness_report",
    "min_subsidy_vector",
    "proportional_share",
    "solve",
    "solve_prop",
    "theorem_bound",
    "validate_instance",
]
