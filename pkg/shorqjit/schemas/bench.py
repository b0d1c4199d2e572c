from typing import Optional

from pydantic import BaseModel, Field


class GateCounts(BaseModel):
    """Conteo de compuertas emitidas por un programa enlazado."""

    one_qubit: int = Field(0, ge=0)
    two_qubit: int = Field(0, ge=0)
    three_qubit: int = Field(0, ge=0)
    measurements: int = Field(0, ge=0)
    resets: int = Field(0, ge=0)
    count_zero_angle: bool = True
    lowered: bool = False

    @property
    def total(self) -> int:
        # Las mediciones y los resets se reportan aparte
        return self.one_qubit + self.two_qubit + self.three_qubit


class BenchRecord(BaseModel):
    """Fila de benchmark; las columnas coinciden con el CSV."""

    n: int = Field(..., ge=1)
    N: Optional[int] = None
    a: Optional[int] = None
    flags: str = "all"
    construction_time_s: float = Field(..., gt=0)
    node_count: int = Field(..., ge=0)
    g1: Optional[int] = None
    g2: Optional[int] = None
    g3: Optional[int] = None
    total: Optional[int] = None
    reduction_ratio: Optional[float] = None
    trials: int = Field(1, ge=1)
    seed: Optional[int] = None
    host: str = ""
    profile: str = ""
    series: Optional[str] = None

    def with_counts(self, counts: GateCounts) -> "BenchRecord":
        return self.model_copy(update={
            "g1": counts.one_qubit,
            "g2": counts.two_qubit,
            "g3": counts.three_qubit,
            "total": counts.total,
        })
