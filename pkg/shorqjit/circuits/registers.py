from dataclasses import dataclass, replace
from enum import Enum

from shorqjit.core.exceptions import InvalidArgumentError, MalformedProgramError
from shorqjit.ir.expressions import Const, Expr, ExprLike, as_expr


class Basis(str, Enum):
    COMPUTATIONAL = "computational"
    FOURIER = "fourier"


@dataclass(frozen=True)
class FourierRegister:
    """Bloque contiguo de qubits (little-endian) con la base en que se encuentra."""
    base: int
    size: int
    basis: Basis = Basis.COMPUTATIONAL

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InvalidArgumentError(f"Un registro necesita al menos 1 qubit, se pidieron {self.size}")
        if self.base < 0:
            raise InvalidArgumentError(f"Base de registro negativa: {self.base}")

    def qubit(self, index: ExprLike) -> Expr:
        index = as_expr(index)
        if isinstance(index, Const):
            return Const(self.base + index.value)
        return Const(self.base) + index

    @property
    def msb(self) -> Expr:
        return Const(self.base + self.size - 1)

    def in_basis(self, basis: Basis) -> "FourierRegister":
        return replace(self, basis=basis)

    def as_fourier(self) -> "FourierRegister":
        return self.in_basis(Basis.FOURIER)

    def as_computational(self) -> "FourierRegister":
        return self.in_basis(Basis.COMPUTATIONAL)

    def expect(self, basis: Basis, operation: str) -> None:
        if self.basis != basis:
            raise MalformedProgramError(
                f"{operation} requiere el registro en base {basis.value} (está en {self.basis.value})"
            )
