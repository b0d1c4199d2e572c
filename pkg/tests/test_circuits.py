import pytest

from shorqjit.arithmetic import gcd, mod_inverse
from shorqjit.bench import count_program
from shorqjit.circuits import (
    FourierRegister,
    build_controlled_mult_mod,
    build_controlled_ua,
    build_fourier_add_const,
    build_fourier_add_mod,
    build_fourier_sub_mod,
    build_inverse_qft,
    build_qft,
)
from shorqjit.core.exceptions import InvalidArgumentError, MalformedProgramError
from shorqjit.ir import GateKind, Namer, Param, RegisterLayout, adjoint, node_count, stream_unroll
from shorqjit.optimizer import InstanceParams
from shorqjit.schemas import OptimizationFlags
from shorqjit.simulator import StateVector, simulate
from tests.conftest import fragment_program, run_basis


def _probability(state: StateVector, index: int) -> float:
    return float(abs(state.amplitudes[index]) ** 2)


def _adder_program(m: int, sign: int = 1):
    register = FourierRegister(0, m)
    namer = Namer()
    nodes = [
        *build_qft(register, namer=namer),
        *build_fourier_add_const(register.as_fourier(), Param("v"), sign=sign, namer=namer),
        *build_inverse_qft(register.as_fourier(), namer=namer),
    ]
    return fragment_program(nodes, m, slots=("v",))


class GateCounter:
    def __init__(self):
        self.kinds = []

    def on_gate(self, kind, qubits, angle):
        self.kinds.append(kind)

    def on_measure(self, qubit):
        return 0

    def on_reset(self, qubit):
        pass


# QFT

def test_qft_single_qubit_is_hadamard():
    program = fragment_program(build_qft(FourierRegister(0, 1)), 1)
    counter = GateCounter()
    stream_unroll(program, {}, counter)
    assert counter.kinds == [GateKind.H]


@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_qft_gate_count(m):
    program = fragment_program(build_qft(FourierRegister(0, m)), m)
    counter = GateCounter()
    stream_unroll(program, {}, counter)
    assert len(counter.kinds) == m * (m + 1) // 2


def test_qft_then_inverse_is_identity():
    register = FourierRegister(0, 3)
    program = fragment_program([*build_qft(register), *build_inverse_qft(register.as_fourier())], 3)
    state = run_basis(program, 5)
    assert state.fidelity(StateVector.basis_state(program.num_qubits, 5)) >= 1 - 1e-12


def test_qft_with_swaps_then_adjoint_is_identity():
    register = FourierRegister(0, 4)
    forward = build_qft(register, include_swaps=True)
    program = fragment_program([*forward, *adjoint(forward)], 4)
    for b in range(16):
        assert _probability(run_basis(program, b), b) >= 1 - 1e-12


def test_qft_requires_computational_basis():
    with pytest.raises(MalformedProgramError):
        build_qft(FourierRegister(0, 3).as_fourier())


# Sumadores de Fourier

def test_fourier_add_examples():
    program = _adder_program(5)
    assert _probability(run_basis(program, 3, {"v": 5}), 8) >= 1 - 1e-12
    program = _adder_program(5, sign=-1)
    assert _probability(run_basis(program, 2, {"v": 3}), 31) >= 1 - 1e-12


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_fourier_add_exhaustive(m):
    program = _adder_program(m)
    for b in range(2**m):
        for v in range(2**m):
            state = run_basis(program, b, {"v": v})
            assert _probability(state, (b + v) % 2**m) >= 1 - 1e-12


def test_fourier_add_zero_emits_zero_angles():
    register = FourierRegister(0, 3).as_fourier()
    program = fragment_program(build_fourier_add_const(register, 0), 3)
    angles = []

    class Angles(GateCounter):
        def on_gate(self, kind, qubits, angle):
            angles.append(angle)

    stream_unroll(program, {}, Angles())
    assert angles == [0.0, 0.0, 0.0]


def test_fourier_add_rejects_three_controls():
    with pytest.raises(InvalidArgumentError):
        build_fourier_add_const(FourierRegister(0, 3).as_fourier(), 1, controls=[4, 5, 6])


def test_controlled_fourier_add_respects_controls():
    register = FourierRegister(0, 4)
    namer = Namer()
    nodes = [
        *build_qft(register, namer=namer),
        *build_fourier_add_const(register.as_fourier(), 5, controls=[4, 5], namer=namer),
        *build_inverse_qft(register.as_fourier(), namer=namer),
    ]
    program = fragment_program(nodes, 6)
    for controls in range(4):
        b = 6
        state = run_basis(program, b | controls << 4)
        expected = (b + 5) % 16 if controls == 3 else b
        assert _probability(state, expected | controls << 4) >= 1 - 1e-12


# Sumador modular

def _mod_adder_program(n: int, sign: int = 1):
    register = FourierRegister(0, n + 1)
    ancilla = n + 1
    namer = Namer()
    builder = build_fourier_add_mod if sign > 0 else build_fourier_sub_mod
    nodes = [
        *build_qft(register, namer=namer),
        *builder(register.as_fourier(), Param("v"), Param("N"), ancilla, elide_overflow=Param("elide"), namer=namer),
        *build_inverse_qft(register.as_fourier(), namer=namer),
    ]
    return fragment_program(nodes, n + 2, slots=("v", "N", "elide"))


def test_mod_adder_example():
    program = _mod_adder_program(4)
    state = run_basis(program, 10, {"v": 9, "N": 15, "elide": False})
    assert _probability(state, 4) >= 1 - 1e-12


def test_mod_adder_elided_matches_full_without_overflow():
    program = _mod_adder_program(4)
    full = run_basis(program, 3, {"v": 9, "N": 15, "elide": False})
    elided = run_basis(program, 3, {"v": 9, "N": 15, "elide": True})
    assert _probability(elided, 12) >= 1 - 1e-12
    assert full.fidelity(elided) >= 1 - 1e-12


@pytest.mark.parametrize("n, moduli", [(3, [5, 7]), (4, [9, 11, 13, 15])])
def test_mod_adder_exhaustive(n, moduli):
    program = _mod_adder_program(n)
    for N in moduli:
        for b in range(N):
            for v in range(N):
                state = run_basis(program, b, {"v": v, "N": N, "elide": False})
                assert _probability(state, (b + v) % N) >= 1 - 1e-9
                if b + v < N:
                    elided = run_basis(program, b, {"v": v, "N": N, "elide": True})
                    assert _probability(elided, b + v) >= 1 - 1e-9


def test_mod_subtraction_inverts_addition():
    program = _mod_adder_program(4, sign=-1)
    for b in range(15):
        state = run_basis(program, b, {"v": 9, "N": 15, "elide": False})
        assert _probability(state, (b - 9) % 15) >= 1 - 1e-9


# Multiplicador y U_a

def _layout_index(n: int, x: int, b: int, control: int) -> int:
    return x | b << n | control << (2 * n + 2)


def _mult_program(n: int):
    layout = RegisterLayout(n)
    nodes = build_controlled_mult_mod(
        layout.estimation, FourierRegister(0, n), FourierRegister(n, n + 1), layout.ancilla,
        Param("a"), Param("N"),
    )
    return fragment_program(nodes, layout.total, slots=("a", "N"))


def test_mult_mod_examples():
    program = _mult_program(4)
    state = run_basis(program, _layout_index(4, 7, 0, 1), {"a": 7, "N": 15})
    assert _probability(state, _layout_index(4, 7, 4, 1)) >= 1 - 1e-9
    state = run_basis(program, _layout_index(4, 1, 0, 1), {"a": 11, "N": 15})
    assert _probability(state, _layout_index(4, 1, 11, 1)) >= 1 - 1e-9


def test_mult_mod_control_off_is_identity():
    program = _mult_program(4)
    for x, b in [(7, 0), (3, 5), (15, 14)]:
        index = _layout_index(4, x, b, 0)
        assert _probability(run_basis(program, index, {"a": 7, "N": 15}), index) >= 1 - 1e-9


@pytest.mark.parametrize("N", [5, 7])
def test_mult_mod_exhaustive_three_bits(N):
    program = _mult_program(3)
    for a in range(2, N):
        for x in range(8):
            for b in range(N):
                state = run_basis(program, _layout_index(3, x, b, 1), {"a": a, "N": N})
                assert _probability(state, _layout_index(3, x, (b + a * x) % N, 1)) >= 1 - 1e-9


def _check_mult_mod_four_bits(N: int, addends) -> None:
    program = _mult_program(4)
    for a in (value for value in range(2, N) if gcd(value, N) == 1):
        for x in range(16):
            for b in addends:
                state = run_basis(program, _layout_index(4, x, b, 1), {"a": a, "N": N})
                assert _probability(state, _layout_index(4, x, (b + a * x) % N, 1)) >= 1 - 1e-9, (a, x, b)


@pytest.mark.parametrize("N", [9, 11, 13, 15])
def test_mult_mod_four_bits_every_base(N):
    _check_mult_mod_four_bits(N, (0, 3, N - 1))


@pytest.mark.slow
@pytest.mark.parametrize("N", [9, 11, 13, 15])
def test_mult_mod_exhaustive_four_bits(N):
    _check_mult_mod_four_bits(N, range(N))


def _ua_nodes(n: int, a, N, namer=None, inverse=None):
    layout = RegisterLayout(n)
    return build_controlled_ua(
        layout.estimation, FourierRegister(0, n), FourierRegister(n, n + 1), layout.ancilla,
        a, N, inverse_multiplier=inverse, namer=namer,
    )


def test_controlled_ua_example():
    program = fragment_program(_ua_nodes(4, 7, 15), 11)
    state = run_basis(program, _layout_index(4, 1, 0, 1))
    assert _probability(state, _layout_index(4, 7, 0, 1)) >= 1 - 1e-9


@pytest.mark.parametrize("n, N", [
    (3, 5),
    (3, 7),
    (4, 9),
    (4, 15),
    pytest.param(4, 11, marks=pytest.mark.slow),
    pytest.param(4, 13, marks=pytest.mark.slow),
])
def test_controlled_ua_matches_modular_multiplication(n, N):
    layout = RegisterLayout(n)
    nodes = _ua_nodes(n, Param("a"), Param("N"), inverse=Param("a_inv"))
    program = fragment_program(nodes, layout.total, slots=("a", "a_inv", "N"))
    for a in (value for value in range(2, N) if gcd(value, N) == 1):
        params = {"a": a, "a_inv": mod_inverse(a, N), "N": N}
        for x in range(N):
            for control in (0, 1):
                state = run_basis(program, _layout_index(n, x, 0, control), params)
                expected = (a * x) % N if control else x
                assert _probability(state, _layout_index(n, expected, 0, control)) >= 1 - 1e-9


def test_controlled_ua_inverse_pair_is_identity():
    namer = Namer()
    nodes = [*_ua_nodes(4, 7, 15, namer), *_ua_nodes(4, 13, 15, namer)]
    program = fragment_program(nodes, 11)
    for x in range(15):
        index = _layout_index(4, x, 0, 1)
        assert _probability(run_basis(program, index), index) >= 1 - 1e-9


def test_controlled_ua_adjoint_is_identity():
    forward = _ua_nodes(3, 3, 7)
    program = fragment_program([*forward, *adjoint(forward)], 9)
    for x in range(7):
        index = _layout_index(3, x, 0, 1)
        assert _probability(run_basis(program, index), index) >= 1 - 1e-10


def test_controlled_ua_rejects_non_invertible_multiplier():
    with pytest.raises(InvalidArgumentError):
        _ua_nodes(4, 6, 15)


def test_controlled_ua_requires_inverse_for_runtime_multiplier():
    with pytest.raises(InvalidArgumentError):
        _ua_nodes(4, Param("a"), Param("N"))


# Programa QPE

def test_qpe_controlled_u_blocks_equal_t(qpe_programs):
    program = qpe_programs(4)
    for t in (3, 5):
        counts = count_program(program, InstanceParams.bind(15, 7, t=t, flags=OptimizationFlags.baseline()))
        unoptimized = count_program(program, InstanceParams.bind(15, 7, t=t, flags=OptimizationFlags.none()))
        # n intercambios controlados por cada U
        assert counts.measurements == t
        assert counts.resets == t
        assert _cswaps(program, t, OptimizationFlags.baseline()) == 4 * t
        assert _cswaps(program, t, OptimizationFlags.none()) == 4 * (2**t - 1)
        assert counts.total < unoptimized.total


def _cswaps(program, t, flags):
    counter = GateCounter()
    stream_unroll(program, InstanceParams.bind(15, 7, t=t, flags=flags), counter, resolve_angles=False)
    return counter.kinds.count(GateKind.CSWAP)


def test_qpe_node_count_matches_tree(qpe_programs):
    program = qpe_programs(6)
    assert program.node_count == node_count(program.nodes)


def test_qpe_program_simulates_from_zero_state(qpe_programs):
    program = qpe_programs(4)
    state, outcome = simulate(program, InstanceParams.bind(15, 7, t=4), seed=3)
    assert outcome.record.t == 4
    assert 0 <= outcome.j < 16
    assert state.marginal_zero(program.layout.auxiliary) >= 1 - 1e-9
