from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Union

from shorqjit.core.exceptions import InvalidArgumentError
from shorqjit.ir.expressions import Expr
from shorqjit.ir.nodes import Fragment, node_count


@dataclass(frozen=True)
class RegisterLayout:
    """
    Distribución little-endian de los 2n+3 qubits:

    - objetivo: 0 .. n-1
    - acumulador (n+1 qubits, con bit de desbordamiento): n .. 2n
    - ancilla del sumador modular: 2n+1
    - estimación: 2n+2

    El acumulador y la ancilla forman los n+2 qubits auxiliares.
    """
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidArgumentError(f"El ancho de bits debe ser >= 1, se recibió {self.n}")

    @property
    def target(self) -> tuple[int, ...]:
        return tuple(range(self.n))

    @property
    def accumulator(self) -> tuple[int, ...]:
        return tuple(range(self.n, 2 * self.n + 1))

    @property
    def ancilla(self) -> int:
        return 2 * self.n + 1

    @property
    def estimation(self) -> int:
        return 2 * self.n + 2

    @property
    def auxiliary(self) -> tuple[int, ...]:
        return self.accumulator + (self.ancilla,)

    @property
    def total(self) -> int:
        return 2 * self.n + 3


class SlotKind(str, Enum):
    INT = "int"
    TABLE = "table"


@dataclass(frozen=True)
class ParamSlot:
    name: str
    kind: SlotKind
    description: str = ""


class ClassicalKind(str, Enum):
    BITS = "bits"
    INT = "int"
    FLOAT = "float"


@dataclass(frozen=True)
class ClassicalDecl:
    """Registro de bits o escalar clásico; size solo aplica a BITS."""
    name: str
    kind: ClassicalKind
    size: Union[Expr, None] = None
    init: Union[int, float] = 0


@dataclass(frozen=True)
class HybridProgram:
    nodes: Fragment
    layout: RegisterLayout
    param_slots: tuple[ParamSlot, ...] = field(default_factory=tuple)
    classical: tuple[ClassicalDecl, ...] = field(default_factory=tuple)
    readout: str = "theta"
    result_slot: str = "j"

    @property
    def bit_width(self) -> int:
        return self.layout.n

    @property
    def num_qubits(self) -> int:
        return self.layout.total

    @property
    def node_count(self) -> int:
        return node_count(self.nodes)

    def slot_names(self) -> tuple[str, ...]:
        return tuple(slot.name for slot in self.param_slots)

    @cached_property
    def compiled(self) -> Any:
        """Ejecutable del árbol (closures), construido una vez por programa."""
        from shorqjit.ir.unroll import compile_program

        return compile_program(self)
