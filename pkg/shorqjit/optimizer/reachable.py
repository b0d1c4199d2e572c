"""
Conjuntos de residuos alcanzables.

El registro objetivo de la QPE contiene una superposición de potencias de a;
conociendo exactamente qué valores pueden aparecer se decide qué sumadores
no se activan nunca (máscara OR) y cuáles no pueden desbordar.
"""
from typing import Iterable, Optional

from shorqjit.arithmetic import gcd
from shorqjit.core.exceptions import InvalidArgumentError


def reachable_values(a: int, N: int, k: int) -> frozenset[int]:
    """{a^j mod N : 0 <= j < 2^k}, construido de forma incremental."""
    if k < 0:
        raise InvalidArgumentError(f"k debe ser no negativo, se recibió {k}")
    if gcd(a % N, N) != 1:
        raise InvalidArgumentError(f"gcd({a}, {N}) != 1")
    values = {1}
    power = a % N
    for _ in range(k):
        grown = values | {(power * x) % N for x in values}
        if len(grown) == len(values):
            break  # saturado en el orden de a
        values = grown
        power = (power * power) % N
    return frozenset(values)


def or_mask(values: Iterable[int], n: int) -> int:
    """OR bit a bit de todos los residuos."""
    mask = 0
    for value in values:
        if value < 0 or value >= 2**n:
            raise InvalidArgumentError(f"{value} no cabe en {n} bits")
        mask |= value
    return mask


def keep_flags(mask: int, n: int) -> list[bool]:
    # El sumador 0 se emite siempre
    return [j == 0 or bool((mask >> j) & 1) for j in range(n)]


def overflow_flags(values: Iterable[int], multiplier: int, N: int, n: int) -> list[bool]:
    """
    Simula el acumulador de M_g para cada x alcanzable: el sumador j necesita
    la corrección si para algún x con bit j activo la suma parcial más
    2^j·g mod N llega a N.
    """
    addends = [(2**j * multiplier) % N for j in range(n)]
    needed = [False] * n
    for x in values:
        partial = 0
        for j, addend in enumerate(addends):
            if (x >> j) & 1:
                if partial + addend >= N:
                    needed[j] = True
                partial = (partial + addend) % N
    return needed


def orbit(values: Iterable[int], multiplier: int, N: int, repetitions: int, cap: int) -> Optional[set[int]]:
    """
    Valores del objetivo antes de cada una de las repeticiones de U_g.
    Devuelve None si el conjunto supera el tope.
    """
    seen = set(values)
    if len(seen) > cap:
        return None
    frontier = set(seen)
    for _ in range(repetitions - 1):
        frontier = {(multiplier * x) % N for x in frontier}
        if frontier <= seen:
            break  # conjunto cerrado bajo g
        seen |= frontier
        if len(seen) > cap:
            return None
    return seen
