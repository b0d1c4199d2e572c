"""
Aritmética entera exacta: gcd, exponenciación e inverso modular, y la
extracción del orden a partir de fracciones continuas.

Todo se calcula con enteros de Python (precisión arbitraria), nunca con
punto flotante.
"""
import math
from dataclasses import dataclass
from typing import Iterator, Optional

from shorqjit.core.exceptions import InvalidArgumentError, NoInverseError


@dataclass(frozen=True)
class Convergent:
    """Aproximación racional p_i/q_i de la fase medida"""
    numerator: int
    denominator: int


def gcd(x: int, y: int) -> int:
    """Máximo común divisor; gcd(x, 0) = x."""
    if x < 0 or y < 0:
        raise InvalidArgumentError(f"gcd requiere enteros no negativos: ({x}, {y})")
    if x == 0 and y == 0:
        raise InvalidArgumentError("gcd(0, 0) no está definido")
    return math.gcd(x, y)


def mod_exp(base: int, exponent: int, modulus: int) -> int:
    """base^exponent mod modulus por cuadrados sucesivos."""
    if modulus < 2:
        raise InvalidArgumentError(f"El módulo debe ser >= 2, se recibió {modulus}")
    if exponent < 0:
        raise InvalidArgumentError(f"El exponente debe ser no negativo, se recibió {exponent}")
    return pow(base, exponent, modulus)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Devuelve (g, s, t) con g = gcd(a, b) = s·a + t·b."""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def mod_inverse(a: int, modulus: int) -> int:
    """
    Inverso modular por Euclides extendido.

    Raises:
        NoInverseError: si gcd(a, modulus) != 1
    """
    if modulus < 2:
        raise InvalidArgumentError(f"El módulo debe ser >= 2, se recibió {modulus}")
    g, s, _ = extended_gcd(a % modulus, modulus)
    if g != 1:
        raise NoInverseError(f"No existe inverso de {a} módulo {modulus} (gcd = {g})")
    return s % modulus


def convergents(numerator: int, denominator: int) -> Iterator[Convergent]:
    """
    Convergentes de la fracción continua de numerator/denominator.

    Los denominadores emitidos crecen estrictamente: cuando los dos primeros
    coinciden (primer cociente parcial igual a 1) solo se emite el segundo.
    """
    if denominator <= 0:
        raise InvalidArgumentError("El denominador debe ser positivo")

    p_prev, p = 0, 1
    q_prev, q = 1, 0
    pending: Optional[Convergent] = None
    x, y = numerator, denominator
    while y != 0:
        quotient = x // y
        x, y = y, x - quotient * y
        p_prev, p = p, quotient * p + p_prev
        q_prev, q = q, quotient * q + q_prev
        current = Convergent(numerator=p, denominator=q)
        if pending is not None and current.denominator > pending.denominator:
            yield pending
        pending = current
    if pending is not None:
        yield pending


def candidate_order(j: int, t: int, N: int, a: int) -> Optional[int]:
    """
    Orden candidato a partir de la medición j de t bits.

    Recorre las convergentes de j/2^t y devuelve el menor denominador q < N
    con a^q ≡ 1 (mod N). Si q falla se prueba también 2q (aliasing de órdenes
    pares). j = 0 no aporta información y devuelve None.
    """
    if t < 1:
        raise InvalidArgumentError(f"t debe ser positivo, se recibió {t}")
    if not 0 <= j < 2**t:
        raise InvalidArgumentError(f"j = {j} fuera de rango para t = {t}")
    if j == 0:
        return None

    for convergent in convergents(j, 2**t):
        q = convergent.denominator
        if q >= N:
            break
        for candidate in (q, 2 * q):
            if candidate < N and mod_exp(a, candidate, N) == 1:
                return candidate
    return None


def brute_force_order(a: int, N: int) -> int:
    """Orden de a módulo N por multiplicación iterada (oráculo de pruebas)."""
    if N < 2:
        raise InvalidArgumentError(f"N debe ser >= 2, se recibió {N}")
    if math.gcd(a % N, N) != 1:
        raise InvalidArgumentError(f"gcd({a}, {N}) != 1: el orden no existe")
    value = a % N
    r = 1
    while value != 1:
        value = (value * a) % N
        r += 1
    return r
