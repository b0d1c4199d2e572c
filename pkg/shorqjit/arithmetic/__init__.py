# Aritmética entera exacta para el driver clásico y el optimizador

from shorqjit.arithmetic.number_theory import (
    Convergent,
    brute_force_order,
    candidate_order,
    convergents,
    extended_gcd,
    gcd,
    mod_exp,
    mod_inverse,
)

__all__ = [
    "Convergent",
    "brute_force_order",
    "candidate_order",
    "convergents",
    "extended_gcd",
    "gcd",
    "mod_exp",
    "mod_inverse",
]
