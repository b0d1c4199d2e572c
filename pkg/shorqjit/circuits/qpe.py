"""
Programa de estimación de fase con un único qubit de estimación.

Convención de lectura (fija en todo el proyecto):

- la iteración k aplica el multiplicador de la potencia más alta que queda,
  a^{2^{t-1-k}} mod N, así que la primera medición da el bit menos
  significativo;
- θ_k es el bit k de j: j = Σ θ_k 2^k;
- antes de la k-ésima medición se aplica PHASE(-2π·S_k) al qubit de
  estimación, con S_0 = 0 y S_{k+1} = S_k/2 + θ_k/4. Esto equivale a
  M_{k-1} = diag[1, exp(-2πi Σ_{ℓ<k} θ_ℓ / 2^{k+1-ℓ})].

Todo lo que depende de la instancia (N, t, multiplicadores, modo de cada
iteración y filas del plan) llega por slots de parámetros, así que el
número de nodos no depende de n, N ni a.
"""
import logging
import math
import time

from shorqjit.circuits.adders import build_fourier_add_const
from shorqjit.circuits.multiplier import PlanSlice, build_controlled_ua
from shorqjit.circuits.qft import build_inverse_qft, build_qft
from shorqjit.circuits.registers import FourierRegister
from shorqjit.ir.expressions import Bit, Const, Param, Var
from shorqjit.ir.nodes import Assign, GateKind, Measure, Namer, Reset, for_loop, fragment, gate, if_then
from shorqjit.ir.program import ClassicalDecl, ClassicalKind, HybridProgram, ParamSlot, RegisterLayout, SlotKind
from shorqjit.logging import log_event

logger = logging.getLogger(__name__)

MODE_SKIP = 0
MODE_ADD = 1
MODE_FULL = 2

QPE_SLOTS = (
    ParamSlot("N", SlotKind.INT, "Módulo a factorizar"),
    ParamSlot("t", SlotKind.INT, "Número de iteraciones de estimación"),
    ParamSlot("modes", SlotKind.TABLE, "Modo por iteración: 0 omitir, 1 suma, 2 U completo"),
    ParamSlot("addends", SlotKind.TABLE, "Constante sumada en modo suma"),
    ParamSlot("multipliers", SlotKind.TABLE, "Multiplicador de U por iteración"),
    ParamSlot("inverse_multipliers", SlotKind.TABLE, "Inverso modular del multiplicador"),
    ParamSlot("repetitions", SlotKind.TABLE, "Repeticiones de U por iteración"),
    ParamSlot("keep_forward", SlotKind.TABLE, "Sumadores emitidos en M_a"),
    ParamSlot("overflow_forward", SlotKind.TABLE, "Sumadores de M_a que necesitan corrección"),
    ParamSlot("keep_inverse", SlotKind.TABLE, "Sumadores emitidos en M†_{a^-1}"),
    ParamSlot("overflow_inverse", SlotKind.TABLE, "Sumadores de M†_{a^-1} que necesitan corrección"),
)


def build_qpe_program(n: int) -> HybridProgram:
    """
    Construye el programa de Shor para N de n bits (2n+3 qubits).

    Args:
        n: Ancho de bits de N, único parámetro estático

    Returns:
        Programa inmutable reutilizable para cualquier N de n bits, cualquier a
        coprimo, cualquier t y cualquier combinación de optimizaciones
    """
    started_at = time.perf_counter()
    layout = RegisterLayout(n)
    target = FourierRegister(0, n)
    accumulator = FourierRegister(n, n + 1)
    ancilla = Const(layout.ancilla)
    estimation = Const(layout.estimation)

    namer = Namer()
    k = Var(namer.fresh("k"))
    modulus = Param("N")
    mode = Param("modes")[k]
    theta_k = Bit("theta", k)

    controlled_u = build_controlled_ua(
        estimation, target, accumulator, ancilla,
        multiplier=Param("multipliers")[k],
        modulus=modulus,
        inverse_multiplier=Param("inverse_multipliers")[k],
        forward=PlanSlice(Param("keep_forward")[k], Param("overflow_forward")[k]),
        inverse=PlanSlice(Param("keep_inverse")[k], Param("overflow_inverse")[k]),
        namer=namer,
    )
    controlled_add = fragment(
        build_qft(target, namer=namer),
        build_fourier_add_const(target.as_fourier(), Param("addends")[k], [estimation], namer=namer),
        build_inverse_qft(target.as_fourier(), namer=namer),
    )

    iteration = fragment(
        gate(GateKind.H, [estimation]),
        if_then(mode.eq(MODE_ADD), controlled_add),
        if_then(mode.eq(MODE_FULL), for_loop(namer.fresh("r"), 0, Param("repetitions")[k], controlled_u)),
        gate(GateKind.PHASE, [estimation], Const(-2 * math.pi) * Var("phase_acc")),
        gate(GateKind.H, [estimation]),
        Measure(estimation, "theta", k),
        Reset(estimation),
        Assign("j", Var("j") + theta_k * Const(2) ** k),
        Assign("phase_acc", Var("phase_acc") / 2 + theta_k / 4),
    )

    program = HybridProgram(
        nodes=fragment(
            gate(GateKind.X, [target.qubit(0)]),
            for_loop(k.name, 0, Param("t"), iteration),
        ),
        layout=layout,
        param_slots=QPE_SLOTS,
        classical=(
            ClassicalDecl("theta", ClassicalKind.BITS, size=Param("t")),
            ClassicalDecl("j", ClassicalKind.INT, init=0),
            ClassicalDecl("phase_acc", ClassicalKind.FLOAT, init=0.0),
        ),
    )
    log_event("program_built", started_at, n=n, qubits=layout.total, nodes=program.node_count)
    return program
