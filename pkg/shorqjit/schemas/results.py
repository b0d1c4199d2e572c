from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


class MeasurementRecord(BaseModel):
    """Bits θ_0 … θ_{t-1} medidos sobre el qubit de estimación."""

    theta: List[int] = Field(default_factory=list)
    t: int = Field(..., ge=0)

    def to_integer(self) -> int:
        """j = Σ θ_k 2^k (el primer bit medido es el menos significativo)."""
        return sum(bit << k for k, bit in enumerate(self.theta))


class RunOutcome(BaseModel):
    record: MeasurementRecord
    j: int = Field(..., ge=0)
    probability: Optional[float] = None


class AttemptOutcome(str, Enum):
    SHORTCUT = "shortcut"
    FACTORS_FOUND = "factors_found"
    NO_CANDIDATE = "no_candidate"
    ODD_ORDER = "odd_order"
    TRIVIAL_ROOT = "trivial_root"
    INVALID_ORDER = "invalid_order"


class AttemptTrace(BaseModel):
    a: int
    shortcut: bool = False
    j: Optional[int] = None
    candidate_r: Optional[int] = None
    root: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    outcome: AttemptOutcome


class FactoringResult(BaseModel):
    N: int
    p: Optional[int] = None
    q: Optional[int] = None
    success: bool = False
    attempts: List[AttemptTrace] = Field(default_factory=list)
    programs_built: int = Field(0, ge=0)


class BranchOutcome(RunOutcome):
    """Rama de la enumeración exhaustiva con su probabilidad exacta."""

    probability: float = Field(..., ge=0.0)
