# Bucle de factorización con caché de programas por ancho de bits

from shorqjit.driver.cache import CacheEntry, ProgramCache, default_cache
from shorqjit.driver.shor import AttemptFailed, check_preconditions, find_candidate_order, shors_algorithm

__all__ = [
    "AttemptFailed",
    "CacheEntry",
    "ProgramCache",
    "check_preconditions",
    "default_cache",
    "find_candidate_order",
    "shors_algorithm",
]
