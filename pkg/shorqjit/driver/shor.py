"""
Bucle clásico de Shor: elegir a, atajo por gcd, búsqueda del orden con el
programa compilado, comprobación de la raíz y extracción de factores.
"""
import logging
import time
from typing import Optional

import numpy as np
from sympy import perfect_power
from tenacity import Retrying, before_sleep_log, retry_if_exception_type, stop_after_attempt

from shorqjit.arithmetic import candidate_order, gcd, mod_exp
from shorqjit.core.config import settings
from shorqjit.core.exceptions import InvalidArgumentError, PreconditionError
from shorqjit.driver.cache import ProgramCache, default_cache
from shorqjit.logging import log_event
from shorqjit.optimizer.params import InstanceParams
from shorqjit.schemas.optimization import OptimizationFlags
from shorqjit.schemas.results import AttemptOutcome, AttemptTrace, FactoringResult
from shorqjit.simulator.rng import SeedLike, make_generator, spawn_generators
from shorqjit.simulator.runner import run_sampled

logger = logging.getLogger(__name__)

MIN_MODULUS = 15


class AttemptFailed(Exception):
    """Intento sin factores; tenacity lo usa para decidir el reintento"""

    def __init__(self, trace: AttemptTrace):
        super().__init__(trace.outcome.value)
        self.trace = trace


def check_preconditions(N: int) -> None:
    """N impar, compuesto no potencia perfecta y >= 15."""
    if N < MIN_MODULUS:
        raise PreconditionError(f"N debe ser >= {MIN_MODULUS}, se recibió {N}")
    if N % 2 == 0:
        raise PreconditionError(f"N = {N} es par: el factor 2 es trivial")
    if perfect_power(N):
        raise PreconditionError(f"N = {N} es una potencia perfecta")


def _sample_order(
    N: int,
    a: int,
    t: Optional[int],
    flags: OptimizationFlags,
    rng: np.random.Generator,
    cache: ProgramCache,
) -> tuple[int, Optional[int]]:
    n = N.bit_length()
    program, _ = cache.get(n)
    params = InstanceParams.bind(N, a, t=t, flags=flags, n=n)
    outcome = run_sampled(program, params, rng)
    return outcome.j, candidate_order(outcome.j, params.t, N, a)


def find_candidate_order(
    N: int,
    a: int,
    t: Optional[int] = None,
    flags: Optional[OptimizationFlags] = None,
    seed: SeedLike = None,
    cache: Optional[ProgramCache] = None,
) -> Optional[int]:
    """Orden candidato de a mód N a partir de una ejecución muestreada; None si no hay."""
    flags = flags if flags is not None else OptimizationFlags.all()
    cache = cache if cache is not None else default_cache
    _, r = _sample_order(N, a, t, flags, make_generator(seed), cache)
    return r


def _attempt(
    N: int,
    a: int,
    t: Optional[int],
    flags: OptimizationFlags,
    rng: np.random.Generator,
    cache: ProgramCache,
) -> AttemptTrace:
    common = gcd(N, a)
    if common > 1:
        p, q = sorted((common, N // common))
        return AttemptTrace(a=a, shortcut=True, p=p, q=q, outcome=AttemptOutcome.SHORTCUT)

    j, r = _sample_order(N, a, t, flags, rng, cache)
    if r is None:
        return AttemptTrace(a=a, j=j, outcome=AttemptOutcome.NO_CANDIDATE)
    if mod_exp(a, r, N) != 1:
        return AttemptTrace(a=a, j=j, candidate_r=r, outcome=AttemptOutcome.INVALID_ORDER)
    if r % 2 == 1:
        return AttemptTrace(a=a, j=j, candidate_r=r, outcome=AttemptOutcome.ODD_ORDER)

    root = mod_exp(a, r // 2, N)
    if root in (1, N - 1):
        return AttemptTrace(a=a, j=j, candidate_r=r, root=root, outcome=AttemptOutcome.TRIVIAL_ROOT)
    p, q = sorted((gcd(N, root - 1), gcd(N, root + 1)))
    if p * q != N or p == 1:
        return AttemptTrace(a=a, j=j, candidate_r=r, root=root, outcome=AttemptOutcome.TRIVIAL_ROOT)
    return AttemptTrace(a=a, j=j, candidate_r=r, root=root, p=p, q=q, outcome=AttemptOutcome.FACTORS_FOUND)


def shors_algorithm(
    N: int,
    seed: Optional[int] = None,
    flags: Optional[OptimizationFlags] = None,
    max_attempts: Optional[int] = None,
    a: Optional[int] = None,
    t: Optional[int] = None,
    cache: Optional[ProgramCache] = None,
) -> FactoringResult:
    """
    Factoriza N = p·q con reintentos.

    Args:
        N: Impar, >= 15, producto de dos primos distintos (promesa del llamador)
        seed: Semilla de la elección de a y de las mediciones
        flags: Optimizaciones (todas activas por defecto)
        max_attempts: Intentos máximos (32 por defecto)
        a: Base fija en vez de sorteada en [2, N-2]
        t: Iteraciones de estimación (2n por defecto)
        cache: Caché de programas (la del proceso por defecto)

    Returns:
        FactoringResult con la traza de intentos; success=False si se agotaron

    Raises:
        PreconditionError: si N es par, potencia perfecta o < 15
        InvalidArgumentError: si max_attempts < 1
    """
    check_preconditions(N)
    flags = flags if flags is not None else OptimizationFlags.all()
    max_attempts = settings.DEFAULT_MAX_ATTEMPTS if max_attempts is None else max_attempts
    if max_attempts < 1:
        raise InvalidArgumentError(f"max_attempts debe ser >= 1, se recibió {max_attempts}")
    cache = cache if cache is not None else default_cache
    draw_rng, measure_rng = spawn_generators(seed, 2)
    builds_before = cache.builds
    started_at = time.perf_counter()
    attempts: list[AttemptTrace] = []

    def run_attempt() -> AttemptTrace:
        base = a if a is not None else int(draw_rng.integers(2, N - 1))
        trace = _attempt(N, base, t, flags, measure_rng, cache)
        attempts.append(trace)
        log_event("attempt", N=N, a=base, j=trace.j, r=trace.candidate_r, outcome=trace.outcome.value)
        if trace.p is None:
            raise AttemptFailed(trace)
        return trace

    retrying = Retrying(
        stop=stop_after_attempt(max_attempts),
        retry=retry_if_exception_type(AttemptFailed),
        before_sleep=before_sleep_log(logger, logging.DEBUG),
        reraise=True,
    )
    try:
        trace = retrying(run_attempt)
    except AttemptFailed:
        logger.warning(f"Sin factores para N = {N} tras {len(attempts)} intentos")
        return FactoringResult(N=N, attempts=attempts, programs_built=cache.builds - builds_before)

    log_event("factored", started_at, N=N, p=trace.p, q=trace.q, attempts=len(attempts))
    return FactoringResult(
        N=N,
        p=trace.p,
        q=trace.q,
        success=True,
        attempts=attempts,
        programs_built=cache.builds - builds_before,
    )
