import logging
import time
from collections import defaultdict
from typing import Any, Callable, Optional

import numpy as np

from shorqjit.core.config import settings
from shorqjit.core.exceptions import CapacityError, InternalConsistencyError
from shorqjit.ir.nodes import GateKind
from shorqjit.ir.program import HybridProgram
from shorqjit.ir.unroll import stream_unroll
from shorqjit.logging import log_event
from shorqjit.schemas.results import BranchOutcome, MeasurementRecord, RunOutcome
from shorqjit.simulator.rng import SeedLike, make_generator
from shorqjit.simulator.statevector import StateVector

logger = logging.getLogger(__name__)

LeafHook = Callable[[BranchOutcome, StateVector], None]


class SamplingVisitor:
    """Aplica cada evento sobre el estado; las mediciones se sortean con el generador."""

    def __init__(self, state: StateVector, rng: np.random.Generator):
        self.state = state
        self.rng = rng

    def on_gate(self, kind: GateKind, qubits: tuple[int, ...], angle: Optional[float]) -> None:
        self.state.apply(kind, qubits, angle)

    def on_measure(self, qubit: int) -> int:
        return self.state.measure(qubit, self.rng)

    def on_reset(self, qubit: int) -> None:
        self.state.reset(qubit, self.rng)


class _Branched(Exception):
    """Señal interna: la rama actual se dividió en la siguiente medición"""
    pass


class _BranchingVisitor:
    def __init__(self, state: StateVector, prefix: tuple[int, ...], probability: float, pending: list, threshold: float):
        self.state = state
        self.prefix = prefix
        self.probability = probability
        self.pending = pending
        self.threshold = threshold

    def on_gate(self, kind: GateKind, qubits: tuple[int, ...], angle: Optional[float]) -> None:
        self.state.apply(kind, qubits, angle)

    def on_measure(self, qubit: int) -> int:
        p_one = self.state.probability_one(qubit)
        # Se apila primero el 1 para explorar antes el 0
        for bit, p in ((1, p_one), (0, 1.0 - p_one)):
            branch_probability = self.probability * p
            if p <= 0.0 or branch_probability < self.threshold:
                continue
            child = self.state.copy()
            child.project(qubit, bit)
            self.pending.append((self.prefix + (bit,), child, branch_probability))
        raise _Branched()

    def on_reset(self, qubit: int) -> None:
        self.state.reset(qubit)


def _outcome(program: HybridProgram, classical: dict[str, Any], probability: Optional[float] = None) -> dict:
    bits = classical.get(program.readout, ())
    record = MeasurementRecord(theta=list(bits), t=len(bits))
    j = classical.get(program.result_slot)
    if j is None:
        j = record.to_integer()
    elif j != record.to_integer():
        raise InternalConsistencyError(f"j = {j} no coincide con los bits medidos {record.theta}")
    return {"record": record, "j": j, "probability": probability}


def simulate(
    program: HybridProgram,
    params: Any,
    seed: SeedLike = None,
    state: Optional[StateVector] = None,
) -> tuple[StateVector, RunOutcome]:
    """Ejecuta el programa sobre un estado (|0...0> por defecto) y lo devuelve junto con el resultado."""
    state = state if state is not None else StateVector(program.num_qubits)
    visitor = SamplingVisitor(state, make_generator(seed))
    classical = stream_unroll(program, params, visitor)
    state.check_norm()
    return state, RunOutcome(**_outcome(program, classical))


def run_sampled(program: HybridProgram, params: Any, seed: SeedLike = None) -> RunOutcome:
    """Una ejecución con mediciones sorteadas; misma semilla, mismo resultado."""
    _, outcome = simulate(program, params, seed)
    logger.debug(f"run_sampled: j={outcome.j} theta={outcome.record.theta}")
    return outcome


def enumerate_branches(
    program: HybridProgram,
    params: Any,
    max_branches: Optional[int] = None,
    leaf_hook: Optional[LeafHook] = None,
) -> list[BranchOutcome]:
    """
    Recorre en profundidad los dos resultados de cada medición.

    Cada rama pendiente guarda el estado justo después de su última medición;
    al retomarla se repiten los resultados anteriores sin emitir compuertas,
    así que cada tramo del programa se simula una sola vez por rama.

    Raises:
        CapacityError: si se superan max_branches hojas o ramas pendientes
    """
    max_branches = settings.MAX_BRANCHES if max_branches is None else max_branches
    threshold = settings.BRANCH_PRUNE_THRESHOLD
    started_at = time.perf_counter()

    pending: list = [((), StateVector(program.num_qubits), 1.0)]
    leaves: list[BranchOutcome] = []
    while pending:
        prefix, state, probability = pending.pop()
        visitor = _BranchingVisitor(state, prefix, probability, pending, threshold)
        try:
            classical = stream_unroll(program, params, visitor, replay=prefix)
        except _Branched:
            if len(pending) + len(leaves) > max_branches:
                raise CapacityError(f"La enumeración supera el presupuesto de {max_branches} ramas")
            continue
        state.check_norm()
        leaf = BranchOutcome(**_outcome(program, classical, probability))
        leaves.append(leaf)
        if leaf_hook is not None:
            leaf_hook(leaf, state)
        if len(leaves) > max_branches:
            raise CapacityError(f"La enumeración supera el presupuesto de {max_branches} ramas")

    total = sum(leaf.probability for leaf in leaves)
    if abs(total - 1.0) > settings.NORM_TOLERANCE:
        raise InternalConsistencyError(f"Las probabilidades de las ramas suman {total}")
    log_event("enumerate_branches", started_at, branches=len(leaves))
    return leaves


def outcome_distribution(branches: list[BranchOutcome]) -> dict[int, float]:
    """Probabilidad total de cada j."""
    distribution: dict[int, float] = defaultdict(float)
    for branch in branches:
        distribution[branch.j] += branch.probability
    return dict(distribution)
