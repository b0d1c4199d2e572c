from dataclasses import dataclass
from typing import Iterable, Optional

from shorqjit.ir.expressions import Bit, Expr, Var, param_names, static_interval
from shorqjit.ir.nodes import Assign, ForLoop, Gate, If, Measure, Node, Reset
from shorqjit.ir.program import ClassicalKind, HybridProgram


@dataclass(frozen=True)
class Diagnostic:
    code: str  # arity | qubit-range | def-before-use | unknown-param
    message: str
    path: str


class _Checker:
    def __init__(self, program: HybridProgram):
        self.program = program
        self.diagnostics: list[Diagnostic] = []
        self.declared_bits = {d.name for d in program.classical if d.kind == ClassicalKind.BITS}
        self.scalars = {d.name for d in program.classical if d.kind != ClassicalKind.BITS}
        self.slots = set(program.slot_names())
        # Registros escritos por alguna medición anterior en orden de programa
        self.written: set[str] = set()

    def report(self, code: str, message: str, path: str) -> None:
        self.diagnostics.append(Diagnostic(code, message, path))

    def check_expr(self, expr: Expr, scope: dict[str, Optional[tuple[int, int]]], path: str) -> None:
        stack = [expr]
        while stack:
            current = stack.pop()
            if isinstance(current, Var) and current.name not in scope and current.name not in self.scalars:
                self.report("def-before-use", f"Variable '{current.name}' no definida", path)
            elif isinstance(current, Bit):
                if current.register not in self.declared_bits:
                    self.report("def-before-use", f"Registro clásico '{current.register}' no declarado", path)
                elif current.register not in self.written:
                    self.report("def-before-use", f"Registro '{current.register}' leído antes de medirse", path)
            stack.extend(current.children())
        for name in sorted(param_names(expr) - self.slots):
            self.report("unknown-param", f"Parámetro '{name}' no declarado", path)

    def check_qubit(self, expr: Expr, scope: dict[str, Optional[tuple[int, int]]], path: str) -> None:
        self.check_expr(expr, scope, path)
        interval = static_interval(expr, scope)
        if interval is None:
            return
        lo, hi = interval
        if lo < 0 or hi >= self.program.num_qubits:
            self.report(
                "qubit-range",
                f"Índice de qubit en [{lo}, {hi}] fuera de 0..{self.program.num_qubits - 1}",
                path,
            )

    def visit(self, nodes: Iterable[Node], scope: dict[str, Optional[tuple[int, int]]], path: str) -> None:
        for position, node in enumerate(nodes):
            here = f"{path}/{position}"
            if isinstance(node, Gate):
                if len(node.qubits) != node.kind.arity:
                    self.report(
                        "arity",
                        f"{node.kind.value} espera {node.kind.arity} qubits y tiene {len(node.qubits)}",
                        here,
                    )
                for qubit in node.qubits:
                    self.check_qubit(qubit, scope, here)
                if node.angle is not None:
                    self.check_expr(node.angle, scope, here)
            elif isinstance(node, Measure):
                self.check_qubit(node.qubit, scope, here)
                self.check_expr(node.index, scope, here)
                if node.register not in self.declared_bits:
                    self.report("def-before-use", f"Medición en registro no declarado '{node.register}'", here)
                self.written.add(node.register)
            elif isinstance(node, Reset):
                self.check_qubit(node.qubit, scope, here)
            elif isinstance(node, Assign):
                self.check_expr(node.expr, scope, here)
                if node.slot not in self.scalars:
                    self.report("def-before-use", f"Asignación a slot no declarado '{node.slot}'", here)
            elif isinstance(node, ForLoop):
                self.check_expr(node.start, scope, here)
                self.check_expr(node.stop, scope, here)
                inner = dict(scope)
                start = static_interval(node.start, scope)
                stop = static_interval(node.stop, scope)
                if start is not None and stop is not None:
                    inner[node.var] = (start[0], stop[1] - 1)
                else:
                    # Cota dinámica: la variable existe pero su rango no es decidible
                    inner[node.var] = None
                self.visit(node.body, inner, f"{here}/for")
            elif isinstance(node, If):
                self.check_expr(node.cond, scope, here)
                self.visit(node.then_body, scope, f"{here}/then")
                self.visit(node.else_body, scope, f"{here}/else")


def validate(program: HybridProgram) -> list[Diagnostic]:
    """Diagnósticos estáticos del programa; lista vacía si está bien formado."""
    checker = _Checker(program)
    checker.visit(program.nodes, {}, "")
    return checker.diagnostics
