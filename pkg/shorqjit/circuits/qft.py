"""
QFT sin intercambios.

Para i de m-1 a 0 se aplica H(r_i) y luego las fases controladas desde los
qubits inferiores, de modo que el qubit i queda con fase e^{2πi·b/2^{i+1}}.
Así los sumadores de Fourier usan la misma posición de bit que la base
computacional. Son m(m+1)/2 compuertas.
"""
from typing import Optional

from shorqjit.circuits.registers import Basis, FourierRegister
from shorqjit.ir.expressions import TWO_PI, Const, Var
from shorqjit.ir.nodes import Fragment, GateKind, Namer, adjoint, for_loop, fragment, gate


def _swaps(register: FourierRegister, namer: Namer) -> Fragment:
    # Intercambio como tres CNOT: q[i] <-> q[m-1-i]
    i = namer.fresh("s")
    low = register.qubit(Var(i))
    high = register.qubit(Const(register.size - 1) - Var(i))
    return fragment(for_loop(
        i, 0, register.size // 2,
        gate(GateKind.CNOT, [low, high]),
        gate(GateKind.CNOT, [high, low]),
        gate(GateKind.CNOT, [low, high]),
    ))


def build_qft(register: FourierRegister, include_swaps: bool = False, namer: Optional[Namer] = None) -> Fragment:
    """QFT sobre un registro en base computacional; al final está en base de Fourier."""
    register.expect(Basis.COMPUTATIONAL, "build_qft")
    namer = namer or Namer()
    i, l = namer.fresh("i"), namer.fresh("l")
    angle = TWO_PI / (Const(2) ** (Var(i) - Var(l) + 1))
    ladder = for_loop(
        i, 0, register.size,
        gate(GateKind.H, [register.qubit(Var(i))]),
        for_loop(
            l, 0, Var(i),
            gate(GateKind.CPHASE, [register.qubit(Var(l)), register.qubit(Var(i))], angle),
            reverse=True,
        ),
        reverse=True,
    )
    if include_swaps:
        return fragment(ladder, _swaps(register, namer))
    return fragment(ladder)


def build_inverse_qft(register: FourierRegister, include_swaps: bool = False, namer: Optional[Namer] = None) -> Fragment:
    register.expect(Basis.FOURIER, "build_inverse_qft")
    return adjoint(build_qft(register.as_computational(), include_swaps, namer))
