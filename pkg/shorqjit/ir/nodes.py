"""
Nodos del IR híbrido.

Los nodos son dataclasses inmutables. Un fragmento es una tupla de nodos; los
cuerpos de bucles y condicionales también son tuplas, así que el árbol completo
es hashable y comparable.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence, Union

from shorqjit.core.exceptions import MalformedProgramError
from shorqjit.ir.expressions import Const, Expr, ExprLike, UnaryOp, as_expr


class GateKind(str, Enum):
    H = "H"
    X = "X"
    PHASE = "PHASE"
    CPHASE = "CPHASE"
    CCPHASE = "CCPHASE"
    CNOT = "CNOT"
    CSWAP = "CSWAP"

    @property
    def arity(self) -> int:
        return _ARITY[self]

    @property
    def has_angle(self) -> bool:
        return self in (GateKind.PHASE, GateKind.CPHASE, GateKind.CCPHASE)


_ARITY = {
    GateKind.H: 1,
    GateKind.X: 1,
    GateKind.PHASE: 1,
    GateKind.CPHASE: 2,
    GateKind.CCPHASE: 3,
    GateKind.CNOT: 2,
    GateKind.CSWAP: 3,
}

# Fase controlada por número de controles
PHASE_BY_CONTROLS = {0: GateKind.PHASE, 1: GateKind.CPHASE, 2: GateKind.CCPHASE}


class Node:
    """Base de los nodos del IR."""

    def children(self) -> Iterator["Node"]:
        return iter(())


@dataclass(frozen=True)
class Gate(Node):
    """Compuerta; en las controladas los controles van primero y el objetivo al final."""
    kind: GateKind
    qubits: tuple[Expr, ...]
    angle: Optional[Expr] = None

    def __post_init__(self) -> None:
        if self.kind.has_angle and self.angle is None:
            raise MalformedProgramError(f"La compuerta {self.kind.value} requiere un ángulo")
        if not self.kind.has_angle and self.angle is not None:
            raise MalformedProgramError(f"La compuerta {self.kind.value} no admite ángulo")


@dataclass(frozen=True)
class Measure(Node):
    qubit: Expr
    register: str
    index: Expr


@dataclass(frozen=True)
class Reset(Node):
    qubit: Expr


@dataclass(frozen=True)
class ForLoop(Node):
    """Bucle contado sobre [start, stop); reverse lo recorre de stop-1 a start."""
    var: str
    start: Expr
    stop: Expr
    body: tuple[Node, ...]
    reverse: bool = False

    def children(self) -> Iterator[Node]:
        return iter(self.body)


@dataclass(frozen=True)
class If(Node):
    cond: Expr
    then_body: tuple[Node, ...]
    else_body: tuple[Node, ...] = field(default_factory=tuple)

    def children(self) -> Iterator[Node]:
        yield from self.then_body
        yield from self.else_body


@dataclass(frozen=True)
class Assign(Node):
    """Asignación a un slot clásico escalar."""
    slot: str
    expr: Expr


Fragment = tuple[Node, ...]
FragmentLike = Union[Node, Iterable[Node]]


def fragment(*parts: FragmentLike) -> Fragment:
    """Aplana nodos y secuencias de nodos en un fragmento."""
    nodes: list[Node] = []
    for part in parts:
        if isinstance(part, Node):
            nodes.append(part)
        else:
            nodes.extend(part)
    return tuple(nodes)


def gate(kind: GateKind, qubits: Sequence[ExprLike], angle: Optional[ExprLike] = None) -> Gate:
    return Gate(kind, tuple(as_expr(q) for q in qubits), None if angle is None else as_expr(angle))


def for_loop(var: str, start: ExprLike, stop: ExprLike, *body: FragmentLike, reverse: bool = False) -> ForLoop:
    return ForLoop(var, as_expr(start), as_expr(stop), fragment(*body), reverse)


def if_then(cond: ExprLike, then_body: FragmentLike, else_body: FragmentLike = ()) -> If:
    return If(as_expr(cond), fragment(then_body), fragment(else_body))


def node_count(nodes: Iterable[Node]) -> int:
    """Cuenta estructural: los cuerpos de bucle se cuentan una sola vez."""
    total = 0
    for node in nodes:
        total += 1 + node_count(node.children())
    return total


def has_effects(node: Node) -> bool:
    """True si el subárbol contiene mediciones o asignaciones clásicas."""
    if isinstance(node, (Measure, Assign)):
        return True
    return any(has_effects(child) for child in node.children())


def _negate(angle: Expr) -> Expr:
    if isinstance(angle, UnaryOp) and angle.op == "neg":
        return angle.operand
    if isinstance(angle, Const):
        return Const(-angle.value)
    return UnaryOp("neg", angle)


def adjoint(nodes: Iterable[Node]) -> Fragment:
    """
    Adjunto de un fragmento unitario: orden invertido, ángulos negados y
    bucles recorridos al revés. Las condiciones se conservan porque solo
    dependen de datos clásicos que el fragmento no modifica.
    """
    result: list[Node] = []
    for node in reversed(tuple(nodes)):
        if isinstance(node, Gate):
            angle = None if node.angle is None else _negate(node.angle)
            result.append(Gate(node.kind, node.qubits, angle))
        elif isinstance(node, ForLoop):
            result.append(ForLoop(node.var, node.start, node.stop, adjoint(node.body), not node.reverse))
        elif isinstance(node, If):
            result.append(If(node.cond, adjoint(node.then_body), adjoint(node.else_body)))
        else:
            raise MalformedProgramError(f"No existe el adjunto de un nodo {type(node).__name__}")
    return tuple(result)


class Namer:
    """Nombres frescos y deterministas para variables de bucle."""

    def __init__(self) -> None:
        self._counters: dict[str, int] = {}

    def fresh(self, prefix: str) -> str:
        index = self._counters.get(prefix, 0)
        self._counters[prefix] = index + 1
        return f"{prefix}{index}"
