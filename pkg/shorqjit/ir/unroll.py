"""
Desenrollado en streaming del IR.

El árbol se compila una sola vez a una lista de closures; cada ejecución
evalúa bucles, condiciones y expresiones con los parámetros concretos y
entrega cada evento (compuerta, medición, reset) al visitante en orden de
programa, sin materializar la lista completa de compuertas. La memoria
usada depende de la profundidad del árbol, no del número de eventos.
"""
import logging
from collections.abc import Mapping
from typing import Any, Callable, Optional, Protocol, Sequence

from shorqjit.core.exceptions import InvalidArgumentError, MalformedProgramError, MissingParameterError
from shorqjit.ir.nodes import Assign, ForLoop, Gate, GateKind, If, Measure, Node, Reset, has_effects
from shorqjit.ir.program import ClassicalKind, HybridProgram

logger = logging.getLogger(__name__)


class EventVisitor(Protocol):
    """Receptor de eventos concretos del desenrollado."""

    def on_gate(self, kind: GateKind, qubits: tuple[int, ...], angle: Optional[float]) -> None:
        ...

    def on_measure(self, qubit: int) -> int:
        ...

    def on_reset(self, qubit: int) -> None:
        ...


class _Run:
    """Estado mutable de una ejecución (uno por llamada a stream_unroll)."""

    __slots__ = ("visitor", "replay", "replay_pos", "replaying", "resolve_angles", "num_qubits")

    def __init__(self, visitor: EventVisitor, replay: Sequence[int], resolve_angles: bool, num_qubits: int):
        self.visitor = visitor
        self.replay = tuple(replay)
        self.replay_pos = 0
        self.replaying = len(self.replay) > 0
        self.resolve_angles = resolve_angles
        self.num_qubits = num_qubits


Step = Callable[[dict, _Run], None]


def _check_qubit(value: Any, run: _Run) -> int:
    if not isinstance(value, int) or value < 0 or value >= run.num_qubits:
        raise MalformedProgramError(f"Índice de qubit {value!r} fuera de rango (qubits = {run.num_qubits})")
    return value


def _compile_gate(node: Gate) -> Step:
    kind = node.kind
    qubit_fns = tuple(q.compile() for q in node.qubits)
    angle_fn = node.angle.compile() if node.angle is not None else None
    arity = kind.arity
    if len(qubit_fns) != arity:
        raise MalformedProgramError(f"{kind.value} requiere {arity} qubits, recibió {len(qubit_fns)}")

    def step(env: dict, run: _Run) -> None:
        if run.replaying:
            return
        qubits = tuple(_check_qubit(fn(env), run) for fn in qubit_fns)
        if arity > 1 and len(set(qubits)) != arity:
            raise MalformedProgramError(f"{kind.value} con qubits repetidos: {qubits}")
        angle = None
        if angle_fn is not None and run.resolve_angles:
            angle = float(angle_fn(env))
        run.visitor.on_gate(kind, qubits, angle)

    return step


def _compile_measure(node: Measure) -> Step:
    qubit_fn = node.qubit.compile()
    index_fn = node.index.compile()
    register = node.register

    def step(env: dict, run: _Run) -> None:
        qubit = _check_qubit(qubit_fn(env), run)
        if run.replaying:
            bit = run.replay[run.replay_pos]
            run.replay_pos += 1
            run.replaying = run.replay_pos < len(run.replay)
        else:
            bit = run.visitor.on_measure(qubit)
        if bit not in (0, 1):
            raise MalformedProgramError(f"Resultado de medición inválido: {bit!r}")
        bits = env[register]
        position = index_fn(env)
        if not 0 <= position < len(bits):
            raise MalformedProgramError(f"Índice {position} fuera del registro '{register}'")
        bits[position] = int(bit)

    return step


def _compile_reset(node: Reset) -> Step:
    qubit_fn = node.qubit.compile()

    def step(env: dict, run: _Run) -> None:
        if run.replaying:
            return
        run.visitor.on_reset(_check_qubit(qubit_fn(env), run))

    return step


def _compile_assign(node: Assign) -> Step:
    slot = node.slot
    expr_fn = node.expr.compile()

    def step(env: dict, run: _Run) -> None:
        env[slot] = expr_fn(env)

    return step


def _compile_block(nodes: Sequence[Node]) -> tuple[Step, ...]:
    return tuple(_compile_node(node) for node in nodes)


def _compile_loop(node: ForLoop) -> Step:
    var = node.var
    start_fn = node.start.compile()
    stop_fn = node.stop.compile()
    body = _compile_block(node.body)
    reverse = node.reverse
    effects = has_effects(node)

    def step(env: dict, run: _Run) -> None:
        if run.replaying and not effects:
            return
        start, stop = start_fn(env), stop_fn(env)
        values = range(stop - 1, start - 1, -1) if reverse else range(start, stop)
        for value in values:
            env[var] = value
            for child in body:
                child(env, run)
        env.pop(var, None)

    return step


def _compile_if(node: If) -> Step:
    cond_fn = node.cond.compile()
    then_body = _compile_block(node.then_body)
    else_body = _compile_block(node.else_body)
    effects = has_effects(node)

    def step(env: dict, run: _Run) -> None:
        if run.replaying and not effects:
            return
        for child in (then_body if cond_fn(env) else else_body):
            child(env, run)

    return step


def _compile_node(node: Node) -> Step:
    if isinstance(node, Gate):
        return _compile_gate(node)
    if isinstance(node, Measure):
        return _compile_measure(node)
    if isinstance(node, Reset):
        return _compile_reset(node)
    if isinstance(node, Assign):
        return _compile_assign(node)
    if isinstance(node, ForLoop):
        return _compile_loop(node)
    if isinstance(node, If):
        return _compile_if(node)
    raise MalformedProgramError(f"Nodo desconocido: {type(node).__name__}")


def compile_program(program: HybridProgram) -> tuple[Step, ...]:
    return _compile_block(program.nodes)


def resolve_bindings(params: Any) -> Mapping[str, Any]:
    """Acepta un mapeo nombre -> valor o un objeto con ``bindings()``."""
    if isinstance(params, Mapping):
        return params
    bindings = getattr(params, "bindings", None)
    if bindings is None:
        raise InvalidArgumentError(f"Parámetros no soportados: {type(params).__name__}")
    return bindings()


def initial_env(program: HybridProgram, params: Any) -> dict:
    bit_width = getattr(params, "n", None)
    if bit_width is not None and bit_width != program.bit_width:
        raise InvalidArgumentError(
            f"Parámetros enlazados para n = {bit_width}, el programa es de n = {program.bit_width}"
        )
    bindings = resolve_bindings(params)
    missing = [name for name in program.slot_names() if name not in bindings]
    if missing:
        raise MissingParameterError(f"Parámetros sin enlazar: {', '.join(missing)}")

    env: dict = {f"${name}": value for name, value in bindings.items()}
    for decl in program.classical:
        if decl.kind == ClassicalKind.BITS:
            size = decl.size.compile()(env) if decl.size is not None else 0
            env[decl.name] = [None] * size
        elif decl.kind == ClassicalKind.FLOAT:
            env[decl.name] = float(decl.init)
        else:
            env[decl.name] = int(decl.init)
    return env


def stream_unroll(
    program: HybridProgram,
    params: Any,
    visitor: EventVisitor,
    resolve_angles: bool = True,
    replay: Sequence[int] = (),
) -> dict[str, Any]:
    """
    Recorre el programa con valores concretos y entrega cada evento al visitante.

    Args:
        program: Programa híbrido
        params: InstanceParams o mapeo nombre -> valor para cada slot
        visitor: Receptor de compuertas, mediciones y resets
        resolve_angles: Si es False, las compuertas de fase llegan con ángulo None
        replay: Resultados de las primeras mediciones; hasta consumirlos no se
            emite ningún evento y se saltan los subárboles sin efectos clásicos

    Returns:
        Estado clásico final (registros de bits como tuplas y escalares)
    """
    env = initial_env(program, params)
    run = _Run(visitor, replay, resolve_angles, program.num_qubits)
    for step in program.compiled:
        step(env, run)
    if run.replaying:
        raise MalformedProgramError(
            f"La repetición pedía {len(run.replay)} mediciones y el programa hizo {run.replay_pos}"
        )

    result: dict[str, Any] = {}
    for decl in program.classical:
        value = env[decl.name]
        result[decl.name] = tuple(value) if isinstance(value, list) else value
    return result
