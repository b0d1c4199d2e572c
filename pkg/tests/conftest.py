"""Fixtures compartidas y oráculos independientes del compilador."""
from typing import Any, Mapping, Optional, Sequence

import numpy as np
import pytest

from shorqjit.circuits import build_qpe_program
from shorqjit.driver import ProgramCache
from shorqjit.ir import HybridProgram, ParamSlot, RegisterLayout, SlotKind, fragment
from shorqjit.ir.nodes import Node
from shorqjit.simulator import StateVector, simulate


def textbook_qpe_distribution(a: int, N: int, t: int) -> dict[int, float]:
    """
    QPE de libro con un registro de t qubits: el estado Σ_x |x>|a^x mod N>
    seguido de la QFT inversa. Para cada valor v del objetivo la amplitud
    de y es la DFT del indicador {x : a^x ≡ v}.
    """
    T = 2**t
    powers = [pow(a, x, N) for x in range(T)]
    probabilities = np.zeros(T)
    for value in set(powers):
        indicator = np.array([1.0 if p == value else 0.0 for p in powers])
        probabilities += np.abs(np.fft.fft(indicator)) ** 2
    probabilities /= T * T
    return {y: float(p) for y, p in enumerate(probabilities)}


def assert_same_distribution(left: Mapping[int, float], right: Mapping[int, float], tolerance: float = 1e-9) -> None:
    for key in set(left) | set(right):
        assert abs(left.get(key, 0.0) - right.get(key, 0.0)) <= tolerance, key


def fragment_program(nodes: Sequence[Node], num_qubits: int, slots: Sequence[str] = ()) -> HybridProgram:
    """Envuelve un fragmento en el programa más pequeño con al menos num_qubits qubits."""
    n = max(1, (num_qubits - 2) // 2)
    return HybridProgram(
        nodes=fragment(*nodes),
        layout=RegisterLayout(n),
        param_slots=tuple(ParamSlot(name, SlotKind.INT) for name in slots),
    )


def run_basis(program: HybridProgram, index: int, params: Optional[Mapping[str, Any]] = None) -> StateVector:
    state = StateVector.basis_state(program.num_qubits, index)
    state, _ = simulate(program, params or {}, seed=0, state=state)
    return state


@pytest.fixture(scope="session")
def qpe_programs():
    """Programas QPE por ancho de bits, construidos una vez por sesión."""
    programs: dict[int, HybridProgram] = {}

    def get(n: int) -> HybridProgram:
        if n not in programs:
            programs[n] = build_qpe_program(n)
        return programs[n]

    return get


@pytest.fixture
def cache():
    return ProgramCache()
