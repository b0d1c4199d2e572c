from enum import Enum
from typing import List

from pydantic import BaseModel, Field

from shorqjit.core.exceptions import InvalidArgumentError


class OptimizationFlags(BaseModel):
    """Optimizaciones específicas de la instancia (todas independientes)."""

    use_precomputed_powers: bool = Field(False, description="Aplicar U_{a^{2^k}} directamente en vez de repetir U_a")
    first_iteration_as_addition: bool = Field(False, description="Sustituir U por una suma controlada de a^{2^k} - 1 mientras el objetivo vale |1>")
    elide_adders_by_or_mask: bool = Field(False, description="Omitir sumadores cuyo bit de control es 0 en todo valor alcanzable")
    elide_overflow_checks: bool = Field(False, description="Sustituir el sumador modular por uno simple cuando no hay desbordamiento")
    skip_identity_powers: bool = Field(False, description="Omitir las iteraciones cuyo multiplicador es 1 mod N")

    model_config = {"frozen": True}

    @classmethod
    def all(cls) -> "OptimizationFlags":
        return cls(**{name: True for name in cls.model_fields})

    @classmethod
    def none(cls) -> "OptimizationFlags":
        return cls()

    @classmethod
    def baseline(cls) -> "OptimizationFlags":
        """Circuito de referencia: solo potencias precalculadas."""
        return cls(use_precomputed_powers=True)

    @classmethod
    def parse(cls, text: str) -> "OptimizationFlags":
        """
        Interpreta 'all', 'none', 'baseline' o una lista separada por comas
        de nombres de flags.
        """
        text = text.strip()
        if text in ("all", "none", "baseline"):
            return getattr(cls, text)()
        names = [name.strip() for name in text.split(",") if name.strip()]
        unknown = [name for name in names if name not in cls.model_fields]
        if unknown:
            raise InvalidArgumentError(f"Flags de optimización desconocidos: {unknown}")
        return cls(**{name: True for name in names})

    def label(self) -> str:
        enabled = [name for name in type(self).model_fields if getattr(self, name)]
        if not enabled:
            return "none"
        if len(enabled) == len(type(self).model_fields):
            return "all"
        if self == type(self).baseline():
            return "baseline"
        return "+".join(enabled)


class IterationMode(str, Enum):
    SKIP = "skip"
    ADD = "add"
    FULL = "full"

    @property
    def code(self) -> int:
        return {"skip": 0, "add": 1, "full": 2}[self.value]


class IterationPlan(BaseModel):
    """Decisiones del plan para una iteración de la QPE."""

    index: int = Field(..., ge=0)
    mode: IterationMode
    multiplier: int = Field(..., description="Multiplicador aplicado por cada repetición de U")
    inverse_multiplier: int
    repetitions: int = Field(1, ge=1)
    addend: int = Field(0, ge=0, description="Constante sumada en modo ADD")
    or_mask: int = Field(0, ge=0)
    inverse_or_mask: int = Field(0, ge=0)
    keep_forward: List[bool]
    overflow_forward: List[bool]
    keep_inverse: List[bool]
    overflow_inverse: List[bool]
    reachable_size: int = Field(0, ge=0, description="Residuos alcanzables antes de la iteración (0 si se superó el tope)")


class ElisionPlan(BaseModel):
    """Plan de ejecución: potencias precalculadas y sumadores omitidos."""

    a: int
    N: int
    n: int
    t: int
    flags: OptimizationFlags
    powers: List[int] = Field(..., description="a^{2^k} mod N para k = 0..t-1")
    inverse_powers: List[int]
    iterations: List[IterationPlan]
    capped: bool = Field(False, description="True si el conjunto alcanzable superó el tope configurado")
