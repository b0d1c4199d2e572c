# Constructores de IR para los subcircuitos de Shor (QFT, sumadores, M_a, U_a, QPE)

from shorqjit.circuits.adders import build_fourier_add_const, build_fourier_add_mod, build_fourier_sub_mod
from shorqjit.circuits.multiplier import FULL_SLICE, PlanSlice, build_controlled_mult_mod, build_controlled_ua
from shorqjit.circuits.qft import build_inverse_qft, build_qft
from shorqjit.circuits.qpe import MODE_ADD, MODE_FULL, MODE_SKIP, QPE_SLOTS, build_qpe_program
from shorqjit.circuits.registers import Basis, FourierRegister

__all__ = [
    "Basis",
    "FULL_SLICE",
    "FourierRegister",
    "MODE_ADD",
    "MODE_FULL",
    "MODE_SKIP",
    "PlanSlice",
    "QPE_SLOTS",
    "build_controlled_mult_mod",
    "build_controlled_ua",
    "build_fourier_add_const",
    "build_fourier_add_mod",
    "build_fourier_sub_mod",
    "build_inverse_qft",
    "build_qft",
    "build_qpe_program",
]
