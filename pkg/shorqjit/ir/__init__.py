# IR híbrido de tamaño constante: expresiones, nodos, desenrollado y validación

from shorqjit.ir.dump import dump_ir
from shorqjit.ir.expressions import Bit, Const, Expr, Param, Var, as_expr, lnot
from shorqjit.ir.nodes import (
    Assign,
    ForLoop,
    Gate,
    GateKind,
    If,
    Measure,
    Namer,
    Node,
    Reset,
    adjoint,
    for_loop,
    fragment,
    gate,
    if_then,
    node_count,
)
from shorqjit.ir.program import ClassicalDecl, ClassicalKind, HybridProgram, ParamSlot, RegisterLayout, SlotKind
from shorqjit.ir.unroll import EventVisitor, stream_unroll
from shorqjit.ir.validate import Diagnostic, validate

__all__ = [
    "Assign",
    "Bit",
    "ClassicalDecl",
    "ClassicalKind",
    "Const",
    "Diagnostic",
    "EventVisitor",
    "Expr",
    "ForLoop",
    "Gate",
    "GateKind",
    "HybridProgram",
    "If",
    "Measure",
    "Namer",
    "Node",
    "Param",
    "ParamSlot",
    "RegisterLayout",
    "Reset",
    "SlotKind",
    "Var",
    "adjoint",
    "as_expr",
    "dump_ir",
    "for_loop",
    "fragment",
    "gate",
    "if_then",
    "lnot",
    "node_count",
    "stream_unroll",
    "validate",
]
