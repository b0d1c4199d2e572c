"""
Expresiones simbólicas del IR.

Las expresiones son árboles inmutables que se evalúan al desenrollar el
programa: ángulos, índices de qubit, cotas de bucle y condiciones. Dependen
solo de constantes, variables de bucle, slots de parámetros y bits clásicos
ya asignados. Antes de evaluarse se compilan a closures de Python.
"""
import math
import operator
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Optional, Union

from shorqjit.core.exceptions import MalformedProgramError, MissingParameterError

Env = dict[str, Any]
Compiled = Callable[[Env], Any]


class Expr:
    """Base de todas las expresiones; sobrecarga la aritmética de Python."""

    def compile(self) -> Compiled:
        raise NotImplementedError

    def children(self) -> tuple["Expr", ...]:
        return ()

    # Aritmética
    def __add__(self, other: "ExprLike") -> "Expr":
        return BinOp("+", self, as_expr(other))

    def __radd__(self, other: "ExprLike") -> "Expr":
        return BinOp("+", as_expr(other), self)

    def __sub__(self, other: "ExprLike") -> "Expr":
        return BinOp("-", self, as_expr(other))

    def __rsub__(self, other: "ExprLike") -> "Expr":
        return BinOp("-", as_expr(other), self)

    def __mul__(self, other: "ExprLike") -> "Expr":
        return BinOp("*", self, as_expr(other))

    def __rmul__(self, other: "ExprLike") -> "Expr":
        return BinOp("*", as_expr(other), self)

    def __truediv__(self, other: "ExprLike") -> "Expr":
        return BinOp("/", self, as_expr(other))

    def __rtruediv__(self, other: "ExprLike") -> "Expr":
        return BinOp("/", as_expr(other), self)

    def __floordiv__(self, other: "ExprLike") -> "Expr":
        return BinOp("//", self, as_expr(other))

    def __mod__(self, other: "ExprLike") -> "Expr":
        return BinOp("%", self, as_expr(other))

    def __pow__(self, other: "ExprLike") -> "Expr":
        return BinOp("**", self, as_expr(other))

    def __rpow__(self, other: "ExprLike") -> "Expr":
        return BinOp("**", as_expr(other), self)

    def __neg__(self) -> "Expr":
        return UnaryOp("neg", self)

    def __getitem__(self, index: "ExprLike") -> "Expr":
        return Index(self, as_expr(index))

    # No se sobrecarga __eq__: los nodos son dataclasses
    def eq(self, other: "ExprLike") -> "Expr":
        return BinOp("==", self, as_expr(other))


ExprLike = Union[Expr, int, float, bool]


@dataclass(frozen=True, eq=True)
class Const(Expr):
    value: Union[int, float, bool]

    def compile(self) -> Compiled:
        value = self.value
        return lambda env: value

    def __str__(self) -> str:
        if isinstance(self.value, float):
            return repr(self.value)
        return str(self.value)


@dataclass(frozen=True, eq=True)
class Var(Expr):
    """Variable de bucle o slot clásico escalar."""
    name: str

    def compile(self) -> Compiled:
        name = self.name

        def load(env: Env) -> Any:
            try:
                return env[name]
            except KeyError:
                raise MalformedProgramError(f"Variable '{name}' usada antes de definirse") from None

        return load

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, eq=True)
class Param(Expr):
    """Slot de parámetro de ejecución (N, tablas del plan...)."""
    name: str

    def compile(self) -> Compiled:
        key = f"${self.name}"
        name = self.name

        def load(env: Env) -> Any:
            try:
                return env[key]
            except KeyError:
                raise MissingParameterError(f"Parámetro '{name}' sin enlazar") from None

        return load

    def __str__(self) -> str:
        return f"${self.name}"


@dataclass(frozen=True, eq=True)
class Bit(Expr):
    """Lectura de un bit de un registro clásico."""
    register: str
    index: Expr

    def children(self) -> tuple[Expr, ...]:
        return (self.index,)

    def compile(self) -> Compiled:
        register = self.register
        index = self.index.compile()

        def load(env: Env) -> int:
            bits = env[register]
            value = bits[index(env)]
            if value is None:
                raise MalformedProgramError(f"Bit {register}[{index(env)}] leído antes de medirse")
            return value

        return load

    def __str__(self) -> str:
        return f"{self.register}[{self.index}]"


_BINARY: dict[str, Callable[[Any, Any], Any]] = {
    "+": operator.add,
    "-": operator.sub,
    "*": operator.mul,
    "/": operator.truediv,
    "//": operator.floordiv,
    "%": operator.mod,
    "**": operator.pow,
    "==": operator.eq,
}

_UNARY: dict[str, Callable[[Any], Any]] = {
    "neg": operator.neg,
    "not": operator.not_,
}


@dataclass(frozen=True, eq=True)
class BinOp(Expr):
    op: str
    lhs: Expr
    rhs: Expr

    def __post_init__(self) -> None:
        if self.op not in _BINARY:
            raise MalformedProgramError(f"Operador binario desconocido: {self.op}")

    def children(self) -> tuple[Expr, ...]:
        return (self.lhs, self.rhs)

    def compile(self) -> Compiled:
        fn = _BINARY[self.op]
        lhs = self.lhs.compile()
        rhs = self.rhs.compile()
        # Atajos para el caso frecuente de un operando constante
        if isinstance(self.rhs, Const):
            right = self.rhs.value
            return lambda env: fn(lhs(env), right)
        if isinstance(self.lhs, Const):
            left = self.lhs.value
            return lambda env: fn(left, rhs(env))
        return lambda env: fn(lhs(env), rhs(env))

    def __str__(self) -> str:
        return f"({self.lhs} {self.op} {self.rhs})"


@dataclass(frozen=True, eq=True)
class UnaryOp(Expr):
    op: str
    operand: Expr

    def __post_init__(self) -> None:
        if self.op not in _UNARY:
            raise MalformedProgramError(f"Operador unario desconocido: {self.op}")

    def children(self) -> tuple[Expr, ...]:
        return (self.operand,)

    def compile(self) -> Compiled:
        fn = _UNARY[self.op]
        operand = self.operand.compile()
        return lambda env: fn(operand(env))

    def __str__(self) -> str:
        symbol = "-" if self.op == "neg" else "not "
        return f"{symbol}{self.operand}"


@dataclass(frozen=True, eq=True)
class Index(Expr):
    """Acceso a una tabla (tupla) enlazada como parámetro."""
    base: Expr
    index: Expr

    def children(self) -> tuple[Expr, ...]:
        return (self.base, self.index)

    def compile(self) -> Compiled:
        base = self.base.compile()
        index = self.index.compile()
        text = str(self)

        def load(env: Env) -> Any:
            table = base(env)
            position = index(env)
            if position < 0 or position >= len(table):
                raise MalformedProgramError(f"Índice {position} fuera de rango en {text}")
            return table[position]

        return load

    def __str__(self) -> str:
        return f"{self.base}[{self.index}]"


def as_expr(value: ExprLike) -> Expr:
    if isinstance(value, Expr):
        return value
    if isinstance(value, (bool, int, float)):
        return Const(value)
    raise MalformedProgramError(f"No se puede convertir {value!r} en expresión")


def lnot(operand: ExprLike) -> Expr:
    return UnaryOp("not", as_expr(operand))


TWO_PI = Const(2 * math.pi)


def static_value(expr: Expr) -> Optional[Any]:
    """Valor de la expresión si es constante, None en otro caso."""
    if isinstance(expr, Const):
        return expr.value
    return None


def static_interval(expr: Expr, scope: Mapping[str, tuple[int, int]]) -> Optional[tuple[int, int]]:
    """
    Intervalo [lo, hi] de una expresión entera cuando es decidible
    estáticamente a partir de los rangos de las variables de bucle.
    """
    if isinstance(expr, Const):
        if isinstance(expr.value, bool) or not isinstance(expr.value, int):
            return None
        return expr.value, expr.value
    if isinstance(expr, Var):
        return scope.get(expr.name)
    if isinstance(expr, BinOp) and expr.op in ("+", "-", "*"):
        left = static_interval(expr.lhs, scope)
        right = static_interval(expr.rhs, scope)
        if left is None or right is None:
            return None
        if expr.op == "+":
            return left[0] + right[0], left[1] + right[1]
        if expr.op == "-":
            return left[0] - right[1], left[1] - right[0]
        products = [x * y for x in left for y in right]
        return min(products), max(products)
    return None


def param_names(expr: Expr) -> set[str]:
    names: set[str] = set()
    stack = [expr]
    while stack:
        current = stack.pop()
        if isinstance(current, Param):
            names.add(current.name)
        stack.extend(current.children())
    return names
