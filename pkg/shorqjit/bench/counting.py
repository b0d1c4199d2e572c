"""
Conteo de compuertas en streaming.

El programa emite la misma secuencia de compuertas en todas las ramas de
medición (solo cambian los ángulos de las correcciones), así que contar con
θ = 0 es exacto para los totales.
"""
import logging
import math
import time
from typing import Any, Optional

from shorqjit.bench.lowering import LOWERED_TALLY
from shorqjit.driver.cache import ProgramCache, default_cache
from shorqjit.ir.nodes import GateKind
from shorqjit.ir.program import HybridProgram
from shorqjit.ir.unroll import stream_unroll
from shorqjit.logging import log_event
from shorqjit.optimizer.params import InstanceParams
from shorqjit.schemas.bench import GateCounts
from shorqjit.schemas.optimization import OptimizationFlags

logger = logging.getLogger(__name__)

NATIVE_TALLY = {
    kind: tuple(1 if arity == kind.arity else 0 for arity in (1, 2, 3)) for kind in GateKind
}


def is_zero_angle(angle: Optional[float]) -> bool:
    if angle is None:
        return False
    return math.isclose(math.remainder(angle, 2 * math.pi), 0.0, abs_tol=1e-12)


class GateCountingVisitor:
    def __init__(self, lowered: bool = False, count_zero_angle: bool = True, outcome: int = 0):
        self.tally = LOWERED_TALLY if lowered else NATIVE_TALLY
        self.lowered = lowered
        self.count_zero_angle = count_zero_angle
        self.outcome = outcome
        self.counts = [0, 0, 0]
        self.measurements = 0
        self.resets = 0

    def on_gate(self, kind: GateKind, qubits: tuple[int, ...], angle: Optional[float]) -> None:
        if not self.count_zero_angle and kind.has_angle and is_zero_angle(angle):
            return
        one, two, three = self.tally[kind]
        self.counts[0] += one
        self.counts[1] += two
        self.counts[2] += three

    def on_measure(self, qubit: int) -> int:
        self.measurements += 1
        return self.outcome

    def on_reset(self, qubit: int) -> None:
        self.resets += 1

    def result(self) -> GateCounts:
        return GateCounts(
            one_qubit=self.counts[0],
            two_qubit=self.counts[1],
            three_qubit=self.counts[2],
            measurements=self.measurements,
            resets=self.resets,
            count_zero_angle=self.count_zero_angle,
            lowered=self.lowered,
        )


def count_program(
    program: HybridProgram,
    params: Any,
    lowered: bool = False,
    count_zero_angle: bool = True,
    outcome: int = 0,
) -> GateCounts:
    """Cuenta las compuertas de un programa enlazado fijando todas las mediciones a ``outcome``."""
    visitor = GateCountingVisitor(lowered, count_zero_angle, outcome)
    # Los ángulos solo hacen falta para descartar los nulos
    stream_unroll(program, params, visitor, resolve_angles=not count_zero_angle)
    return visitor.result()


def count_gates(
    N: int,
    a: int,
    t: Optional[int] = None,
    flags: Optional[OptimizationFlags] = None,
    lowered: bool = False,
    count_zero_angle: bool = True,
    cache: Optional[ProgramCache] = None,
) -> GateCounts:
    """Compuertas emitidas por el programa de Shor enlazado para (N, a), sin simular."""
    started_at = time.perf_counter()
    flags = flags if flags is not None else OptimizationFlags.all()
    cache = cache if cache is not None else default_cache
    program, _ = cache.get(N.bit_length())
    params = InstanceParams.bind(N, a, t=t, flags=flags)
    counts = count_program(program, params, lowered, count_zero_angle)
    log_event("count_gates", started_at, N=N, a=a, flags=flags.label(), total=counts.total, lowered=lowered)
    return counts
