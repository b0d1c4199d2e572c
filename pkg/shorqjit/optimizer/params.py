from typing import Any, Optional

from pydantic import BaseModel, Field

from shorqjit.arithmetic import gcd
from shorqjit.core.config import settings
from shorqjit.core.exceptions import InvalidArgumentError
from shorqjit.optimizer.plan import build_plan
from shorqjit.schemas.optimization import ElisionPlan, OptimizationFlags


class InstanceParams(BaseModel):
    """Enlaces de ejecución del programa de n bits para un par (N, a)."""

    N: int = Field(..., ge=3)
    a: int = Field(..., ge=2)
    n: int = Field(..., ge=1)
    t: int = Field(..., ge=1)
    flags: OptimizationFlags
    plan: ElisionPlan

    @classmethod
    def bind(
        cls,
        N: int,
        a: int,
        t: Optional[int] = None,
        flags: Optional[OptimizationFlags] = None,
        n: Optional[int] = None,
    ) -> "InstanceParams":
        n = N.bit_length() if n is None else n
        if N >= 2**n:
            raise InvalidArgumentError(f"N = {N} necesita {N.bit_length()} bits, el programa tiene {n}")
        if not 2 <= a < N:
            raise InvalidArgumentError(f"a = {a} fuera de [2, N-1]")
        if gcd(a, N) != 1:
            raise InvalidArgumentError(f"gcd({a}, {N}) != 1: no hay orden que estimar")
        t = settings.DEFAULT_T_FACTOR * n if t is None else t
        flags = flags if flags is not None else OptimizationFlags.all()
        plan = build_plan(a, N, n, t, flags)
        return cls(N=N, a=a, n=n, t=t, flags=flags, plan=plan)

    def bindings(self) -> dict[str, Any]:
        """Valores de los slots del programa QPE."""
        iterations = self.plan.iterations
        return {
            "N": self.N,
            "t": self.t,
            "modes": tuple(it.mode.code for it in iterations),
            "addends": tuple(it.addend for it in iterations),
            "multipliers": tuple(it.multiplier for it in iterations),
            "inverse_multipliers": tuple(it.inverse_multiplier for it in iterations),
            "repetitions": tuple(it.repetitions for it in iterations),
            "keep_forward": tuple(tuple(it.keep_forward) for it in iterations),
            "overflow_forward": tuple(tuple(it.overflow_forward) for it in iterations),
            "keep_inverse": tuple(tuple(it.keep_inverse) for it in iterations),
            "overflow_inverse": tuple(tuple(it.overflow_inverse) for it in iterations),
        }
