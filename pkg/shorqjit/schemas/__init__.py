from shorqjit.schemas.bench import BenchRecord, GateCounts
from shorqjit.schemas.optimization import ElisionPlan, IterationMode, IterationPlan, OptimizationFlags
from shorqjit.schemas.results import (
    AttemptOutcome,
    AttemptTrace,
    BranchOutcome,
    FactoringResult,
    MeasurementRecord,
    RunOutcome,
)

__all__ = [
    "AttemptOutcome",
    "AttemptTrace",
    "BenchRecord",
    "BranchOutcome",
    "ElisionPlan",
    "FactoringResult",
    "GateCounts",
    "IterationMode",
    "IterationPlan",
    "MeasurementRecord",
    "OptimizationFlags",
    "RunOutcome",
]
