"""
Descomposición de las compuertas de 3 qubits en compuertas de 1 y 2 qubits.

- CCPHASE(θ) sobre (c1, c2, t): CP(θ/2)(c2,t), CNOT(c1,c2), CP(-θ/2)(c2,t),
  CNOT(c1,c2), CP(θ/2)(c1,t). Cinco compuertas de 2 qubits.
- CSWAP(c, a, b): CNOT(b,a), Toffoli(c, a -> b), CNOT(b,a), con el Toffoli
  estándar de 15 compuertas (6 CNOT, 2 H, 7 T/T†). En total 17.
"""
import math
from typing import Optional

from shorqjit.ir.nodes import GateKind

Event = tuple[GateKind, tuple[int, ...], Optional[float]]

T_ANGLE = math.pi / 4


def _t(q: int, sign: int = 1) -> Event:
    return GateKind.PHASE, (q,), sign * T_ANGLE


def _cx(control: int, target: int) -> Event:
    return GateKind.CNOT, (control, target), None


def _toffoli(a: int, b: int, c: int) -> list[Event]:
    h = (GateKind.H, (c,), None)
    return [
        h, _cx(b, c), _t(c, -1), _cx(a, c), _t(c), _cx(b, c), _t(c, -1), _cx(a, c),
        _t(b), _t(c), h, _cx(a, b), _t(a), _t(b, -1), _cx(a, b),
    ]


def lower_event(kind: GateKind, qubits: tuple[int, ...], angle: Optional[float]) -> list[Event]:
    """Secuencia equivalente con compuertas de aridad <= 2; las demás quedan igual."""
    if kind == GateKind.CCPHASE:
        c1, c2, target = qubits
        half = None if angle is None else angle / 2
        neg_half = None if angle is None else -angle / 2
        return [
            (GateKind.CPHASE, (c2, target), half),
            (GateKind.CNOT, (c1, c2), None),
            (GateKind.CPHASE, (c2, target), neg_half),
            (GateKind.CNOT, (c1, c2), None),
            (GateKind.CPHASE, (c1, target), half),
        ]
    if kind == GateKind.CSWAP:
        control, a, b = qubits
        return [(GateKind.CNOT, (b, a), None), *_toffoli(control, a, b), (GateKind.CNOT, (b, a), None)]
    return [(kind, qubits, angle)]


def _tally(kind: GateKind) -> tuple[int, int, int]:
    events = lower_event(kind, tuple(range(kind.arity)), 0.0)
    counts = [0, 0, 0]
    for lowered_kind, _, _ in events:
        counts[lowered_kind.arity - 1] += 1
    return counts[0], counts[1], counts[2]


# (1q, 2q, 3q) que aporta cada tipo tras la descomposición
LOWERED_TALLY = {kind: _tally(kind) for kind in GateKind}
