from typing import Iterable

from shorqjit.ir.nodes import Assign, ForLoop, Gate, If, Measure, Node, Reset
from shorqjit.ir.program import ClassicalKind, HybridProgram

INDENT = "  "


def _lines(nodes: Iterable[Node], depth: int) -> list[str]:
    pad = INDENT * depth
    lines: list[str] = []
    for node in nodes:
        if isinstance(node, Gate):
            qubits = ", ".join(f"q[{q}]" for q in node.qubits)
            angle = f"({node.angle})" if node.angle is not None else ""
            lines.append(f"{pad}{node.kind.value.lower()}{angle} {qubits}")
        elif isinstance(node, Measure):
            lines.append(f"{pad}{node.register}[{node.index}] = measure q[{node.qubit}]")
        elif isinstance(node, Reset):
            lines.append(f"{pad}reset q[{node.qubit}]")
        elif isinstance(node, Assign):
            lines.append(f"{pad}{node.slot} = {node.expr}")
        elif isinstance(node, ForLoop):
            direction = " reversed" if node.reverse else ""
            lines.append(f"{pad}for {node.var} in {node.start}..{node.stop}{direction}:")
            lines.extend(_lines(node.body, depth + 1))
        elif isinstance(node, If):
            lines.append(f"{pad}if {node.cond}:")
            lines.extend(_lines(node.then_body, depth + 1))
            if node.else_body:
                lines.append(f"{pad}else:")
                lines.extend(_lines(node.else_body, depth + 1))
    return lines


def dump_ir(program: HybridProgram) -> str:
    """Texto estable del árbol: un nodo por línea, sangrado por profundidad."""
    header = [
        f"program bit_width={program.bit_width} qubits={program.num_qubits} nodes={program.node_count}",
        f"params: {', '.join(program.slot_names())}",
    ]
    for decl in program.classical:
        if decl.kind == ClassicalKind.BITS:
            header.append(f"classical {decl.name}: bits[{decl.size}]")
        else:
            header.append(f"classical {decl.name}: {decl.kind.value} = {decl.init}")
    return "\n".join(header + _lines(program.nodes, 0)) + "\n"
