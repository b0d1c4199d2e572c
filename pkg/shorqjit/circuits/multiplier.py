import math
from dataclasses import dataclass
from typing import Optional

from shorqjit.arithmetic import mod_inverse
from shorqjit.circuits.adders import build_fourier_add_mod
from shorqjit.circuits.qft import build_inverse_qft, build_qft
from shorqjit.circuits.registers import Basis, FourierRegister
from shorqjit.core.exceptions import InvalidArgumentError
from shorqjit.ir.expressions import Const, Expr, ExprLike, Var, as_expr, lnot, static_value
from shorqjit.ir.nodes import Fragment, GateKind, Namer, adjoint, for_loop, fragment, gate, if_then


@dataclass(frozen=True)
class PlanSlice:
    """
    Filas del plan que gobiernan los n sumadores de un multiplicador.

    keep[j] decide si el sumador j se emite; overflow[j] si necesita la
    corrección de desbordamiento. Sin filas se emite el circuito completo.
    """
    keep: Optional[Expr] = None
    overflow: Optional[Expr] = None

    def keep_at(self, j: Expr) -> Expr:
        return Const(True) if self.keep is None else self.keep[j]

    def elide_at(self, j: Expr) -> Expr:
        return Const(False) if self.overflow is None else lnot(self.overflow[j])


FULL_SLICE = PlanSlice()


def build_controlled_mult_mod(
    control: ExprLike,
    x_register: FourierRegister,
    accumulator: FourierRegister,
    ancilla: ExprLike,
    multiplier: ExprLike,
    modulus: ExprLike,
    plan: PlanSlice = FULL_SLICE,
    namer: Optional[Namer] = None,
) -> Fragment:
    """M_a: |c>|x>|b>|0> -> |c>|x>|(b + c·a·x) mod N>|0>."""
    x_register.expect(Basis.COMPUTATIONAL, "build_controlled_mult_mod")
    accumulator.expect(Basis.COMPUTATIONAL, "build_controlled_mult_mod")
    if accumulator.size != x_register.size + 1:
        raise InvalidArgumentError("El acumulador debe tener un qubit más que el registro x")

    namer = namer or Namer()
    j = Var(namer.fresh("j"))
    addend = (Const(2) ** j * as_expr(multiplier)) % as_expr(modulus)
    fourier = accumulator.as_fourier()
    return fragment(
        build_qft(accumulator, namer=namer),
        for_loop(
            j.name, 0, x_register.size,
            if_then(
                plan.keep_at(j),
                build_fourier_add_mod(
                    fourier, addend, modulus, ancilla,
                    controls=[control, x_register.qubit(j)],
                    elide_overflow=plan.elide_at(j),
                    namer=namer,
                ),
            ),
        ),
        build_inverse_qft(fourier, namer=namer),
    )


def build_controlled_ua(
    control: ExprLike,
    target: FourierRegister,
    accumulator: FourierRegister,
    ancilla: ExprLike,
    multiplier: ExprLike,
    modulus: ExprLike,
    inverse_multiplier: Optional[ExprLike] = None,
    forward: PlanSlice = FULL_SLICE,
    inverse: PlanSlice = FULL_SLICE,
    namer: Optional[Namer] = None,
) -> Fragment:
    """
    U_a controlado: M_a, intercambio controlado objetivo <-> acumulador y
    M†_{a^{-1}}. Deja |c>|x>|0> en |c>|a^c·x mod N>|0>.
    """
    multiplier = as_expr(multiplier)
    modulus = as_expr(modulus)
    a_value, n_value = static_value(multiplier), static_value(modulus)
    if inverse_multiplier is None:
        if a_value is None or n_value is None:
            raise InvalidArgumentError("Sin inverso explícito el multiplicador y N deben ser constantes")
        inverse_multiplier = mod_inverse(a_value, n_value)
    inverse_multiplier = as_expr(inverse_multiplier)
    inv_value = static_value(inverse_multiplier)
    if a_value is not None and n_value is not None:
        if math.gcd(a_value, n_value) != 1:
            raise InvalidArgumentError(f"{a_value} no es invertible módulo {n_value}")
        if inv_value is not None and (a_value * inv_value) % n_value != 1:
            raise InvalidArgumentError(f"{inv_value} no es el inverso de {a_value} módulo {n_value}")

    namer = namer or Namer()
    i = Var(namer.fresh("w"))
    return fragment(
        build_controlled_mult_mod(control, target, accumulator, ancilla, multiplier, modulus, forward, namer),
        for_loop(i.name, 0, target.size, gate(GateKind.CSWAP, [control, target.qubit(i), accumulator.qubit(i)])),
        adjoint(build_controlled_mult_mod(
            control, target, accumulator, ancilla, inverse_multiplier, modulus, inverse, namer
        )),
    )
