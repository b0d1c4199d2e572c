"""
Vector de estado denso (complex128, little-endian).

El qubit k es el bit k del índice plano. Los núcleos trabajan sobre vistas
del tensor (2,)*q: fijar un qubit a 0/1 es indexar su eje, así que cada
compuerta toca solo las amplitudes afectadas.
"""
import logging
import math
from typing import Optional, Sequence

import numpy as np

from shorqjit.core.config import settings
from shorqjit.core.exceptions import CapacityError, InternalConsistencyError, MalformedProgramError
from shorqjit.ir.nodes import GateKind

logger = logging.getLogger(__name__)

INV_SQRT2 = 1 / math.sqrt(2)


class StateVector:
    def __init__(self, num_qubits: int, amplitudes: Optional[np.ndarray] = None, max_qubits: Optional[int] = None):
        max_qubits = settings.MAX_QUBITS if max_qubits is None else max_qubits
        if num_qubits < 1:
            raise MalformedProgramError(f"Número de qubits inválido: {num_qubits}")
        if num_qubits > max_qubits:
            raise CapacityError(
                f"{num_qubits} qubits superan el máximo configurado ({max_qubits}); usa el conteo de compuertas"
            )
        self.num_qubits = num_qubits
        if amplitudes is None:
            amplitudes = np.zeros(2**num_qubits, dtype=np.complex128)
            amplitudes[0] = 1.0
        elif amplitudes.shape != (2**num_qubits,):
            raise MalformedProgramError(f"Se esperaban {2**num_qubits} amplitudes, llegaron {amplitudes.shape}")
        self.amplitudes = np.ascontiguousarray(amplitudes, dtype=np.complex128)
        self._tensor = self.amplitudes.reshape((2,) * num_qubits)

    @classmethod
    def basis_state(cls, num_qubits: int, index: int, max_qubits: Optional[int] = None) -> "StateVector":
        amplitudes = np.zeros(2**num_qubits, dtype=np.complex128)
        amplitudes[index] = 1.0
        return cls(num_qubits, amplitudes, max_qubits)

    def copy(self) -> "StateVector":
        return StateVector(self.num_qubits, self.amplitudes.copy(), max_qubits=self.num_qubits)

    def _view(self, fixed: dict[int, int]) -> np.ndarray:
        index: list = [slice(None)] * self.num_qubits
        # Cortes de longitud 1: el resultado es siempre una vista
        for qubit, bit in fixed.items():
            if not 0 <= qubit < self.num_qubits:
                raise MalformedProgramError(f"Qubit {qubit} fuera de rango (qubits = {self.num_qubits})")
            index[self.num_qubits - 1 - qubit] = slice(bit, bit + 1)
        return self._tensor[tuple(index)]

    # Compuertas

    def apply(self, kind: GateKind, qubits: Sequence[int], angle: Optional[float] = None) -> None:
        if len(qubits) != kind.arity:
            raise MalformedProgramError(f"{kind.value} requiere {kind.arity} qubits, recibió {len(qubits)}")
        if len(set(qubits)) != len(qubits):
            raise MalformedProgramError(f"{kind.value} con qubits repetidos: {tuple(qubits)}")
        if kind.has_angle and (angle is None or not math.isfinite(angle)):
            raise MalformedProgramError(f"{kind.value} requiere un ángulo finito, recibió {angle}")

        if kind == GateKind.H:
            self._hadamard(qubits[0])
        elif kind == GateKind.X:
            self._swap({qubits[0]: 0}, {qubits[0]: 1})
        elif kind == GateKind.CNOT:
            control, target = qubits
            self._swap({control: 1, target: 0}, {control: 1, target: 1})
        elif kind == GateKind.CSWAP:
            control, a, b = qubits
            self._swap({control: 1, a: 1, b: 0}, {control: 1, a: 0, b: 1})
        else:
            # Fases: solo el subespacio con todos los qubits en 1
            self._view({q: 1 for q in qubits})[...] *= np.exp(1j * angle)

    def _hadamard(self, qubit: int) -> None:
        zero = self._view({qubit: 0})
        one = self._view({qubit: 1})
        total = zero + one
        one[...] = (zero - one) * INV_SQRT2
        zero[...] = total * INV_SQRT2

    def _swap(self, left: dict[int, int], right: dict[int, int]) -> None:
        a = self._view(left)
        b = self._view(right)
        tmp = a.copy()
        a[...] = b
        b[...] = tmp

    # Medición y reset

    def probability_one(self, qubit: int) -> float:
        one = self._view({qubit: 1})
        return float(np.vdot(one, one).real)

    def project(self, qubit: int, bit: int) -> float:
        """Proyecta el qubit sobre |bit> y renormaliza; devuelve la probabilidad."""
        p_one = self.probability_one(qubit)
        probability = p_one if bit == 1 else 1.0 - p_one
        if probability <= 0.0:
            raise InternalConsistencyError(f"Proyección del qubit {qubit} sobre un resultado de probabilidad 0")
        self._view({qubit: 1 - bit})[...] = 0.0
        self.amplitudes /= math.sqrt(probability)
        self.check_norm()
        return probability

    def measure(self, qubit: int, rng: np.random.Generator) -> int:
        """Medición proyectiva: resultado 1 si el uniforme sorteado es < p(1)."""
        p_one = self.probability_one(qubit)
        bit = 1 if rng.random() < p_one else 0
        self.project(qubit, bit)
        return bit

    def reset(self, qubit: int, rng: Optional[np.random.Generator] = None, tolerance: float = 1e-12) -> None:
        p_one = self.probability_one(qubit)
        if p_one <= tolerance:
            if p_one > 0.0:
                self.project(qubit, 0)
            return
        if p_one >= 1.0 - tolerance:
            if p_one < 1.0:
                self.project(qubit, 1)
            self._swap({qubit: 0}, {qubit: 1})
            return
        if rng is None:
            raise MalformedProgramError(f"Reset de un qubit en superposición ({qubit}) sin generador")
        if self.measure(qubit, rng) == 1:
            self._swap({qubit: 0}, {qubit: 1})

    # Observables

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def check_norm(self) -> None:
        drift = abs(self.norm() - 1.0)
        if drift > settings.NORM_TOLERANCE:
            raise InternalConsistencyError(f"Deriva de la norma {drift:.3e} supera {settings.NORM_TOLERANCE}")

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def marginal_zero(self, qubits: Sequence[int]) -> float:
        """Probabilidad de que todos los qubits indicados estén en |0>."""
        zero = self._view({q: 0 for q in qubits})
        return float(np.vdot(zero, zero).real)

    def fidelity(self, other: "StateVector") -> float:
        return float(abs(np.vdot(self.amplitudes, other.amplitudes)) ** 2)
