# Optimizaciones específicas de la instancia, entregadas como parámetros de ejecución

from shorqjit.optimizer.params import InstanceParams
from shorqjit.optimizer.plan import build_plan, precompute_powers
from shorqjit.optimizer.reachable import keep_flags, or_mask, orbit, overflow_flags, reachable_values

__all__ = [
    "InstanceParams",
    "build_plan",
    "keep_flags",
    "or_mask",
    "orbit",
    "overflow_flags",
    "precompute_powers",
    "reachable_values",
]
