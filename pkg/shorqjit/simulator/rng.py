"""
Generador pseudoaleatorio con semilla.

Se usa Philox (basado en contador) de numpy: mismo resultado en cualquier
plataforma para la misma semilla, y divisible con SeedSequence.spawn.
"""
from typing import Union

import numpy as np

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator, None]


def make_generator(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.Philox(seed))


def spawn_generators(seed: Union[int, None], count: int) -> list[np.random.Generator]:
    """Generadores independientes derivados de una misma semilla."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.Generator(np.random.Philox(child)) for child in children]
