"""
Sumadores en base de Fourier.

Sumar una constante v a un registro en base de Fourier es una fase por qubit:
el qubit i recibe 2π·(v mod 2^{i+1})/2^{i+1}. El valor es una expresión que se
evalúa al desenrollar, por eso el programa no depende de a ni de N.
"""
from typing import Optional, Sequence

from shorqjit.circuits.qft import build_inverse_qft, build_qft
from shorqjit.circuits.registers import Basis, FourierRegister
from shorqjit.core.exceptions import InvalidArgumentError
from shorqjit.ir.expressions import TWO_PI, Const, ExprLike, Var, as_expr
from shorqjit.ir.nodes import PHASE_BY_CONTROLS, Fragment, GateKind, Namer, adjoint, for_loop, fragment, gate, if_then


def build_fourier_add_const(
    register: FourierRegister,
    value: ExprLike,
    controls: Sequence[ExprLike] = (),
    sign: int = 1,
    namer: Optional[Namer] = None,
) -> Fragment:
    """Φ(±v): suma (o resta) v módulo 2^m; aridad de cada fase = 1 + controles."""
    register.expect(Basis.FOURIER, "build_fourier_add_const")
    if len(controls) > 2:
        raise InvalidArgumentError(f"Se admiten hasta 2 controles, se recibieron {len(controls)}")
    if sign not in (1, -1):
        raise InvalidArgumentError(f"El signo debe ser +1 o -1, se recibió {sign}")

    namer = namer or Namer()
    i = namer.fresh("p")
    period = Const(2) ** (Var(i) + 1)
    angle = TWO_PI * ((as_expr(value) % period) / period)
    if sign < 0:
        angle = -angle
    kind = PHASE_BY_CONTROLS[len(controls)]
    return fragment(for_loop(i, 0, register.size, gate(kind, [*controls, register.qubit(Var(i))], angle)))


def build_fourier_add_mod(
    register: FourierRegister,
    value: ExprLike,
    modulus: ExprLike,
    ancilla: ExprLike,
    controls: Sequence[ExprLike] = (),
    elide_overflow: ExprLike = False,
    namer: Optional[Namer] = None,
) -> Fragment:
    """
    Φ₊: suma modular de Beauregard sobre un registro de n+1 qubits.

    Con b < N y v < N deja (b + v) mod N y la ancilla en |0>. Si elide_overflow
    vale True al desenrollar se emite solo la suma simple controlada, válida
    cuando ningún término alcanzable desborda.
    """
    register.expect(Basis.FOURIER, "build_fourier_add_mod")
    namer = namer or Namer()
    computational = register.as_computational()
    msb = register.msb

    def add(amount: ExprLike, ctrl: Sequence[ExprLike], sign: int) -> Fragment:
        return build_fourier_add_const(register, amount, ctrl, sign, namer)

    full = fragment(
        add(value, controls, 1),
        add(modulus, (), -1),
        build_inverse_qft(register, namer=namer),
        gate(GateKind.CNOT, [msb, ancilla]),
        build_qft(computational, namer=namer),
        add(modulus, [ancilla], 1),
        add(value, controls, -1),
        build_inverse_qft(register, namer=namer),
        gate(GateKind.X, [msb]),
        gate(GateKind.CNOT, [msb, ancilla]),
        gate(GateKind.X, [msb]),
        build_qft(computational, namer=namer),
        add(value, controls, 1),
    )
    return fragment(if_then(elide_overflow, add(value, controls, 1), full))


def build_fourier_sub_mod(
    register: FourierRegister,
    value: ExprLike,
    modulus: ExprLike,
    ancilla: ExprLike,
    controls: Sequence[ExprLike] = (),
    elide_overflow: ExprLike = False,
    namer: Optional[Namer] = None,
) -> Fragment:
    """Resta modular: adjunto exacto de build_fourier_add_mod."""
    return adjoint(build_fourier_add_mod(register, value, modulus, ancilla, controls, elide_overflow, namer))
