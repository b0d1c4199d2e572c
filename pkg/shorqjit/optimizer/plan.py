import logging
from typing import Optional

from shorqjit.arithmetic import gcd, mod_inverse
from shorqjit.core.config import settings
from shorqjit.core.exceptions import InvalidArgumentError
from shorqjit.optimizer.reachable import keep_flags, or_mask, orbit, overflow_flags
from shorqjit.schemas.optimization import ElisionPlan, IterationMode, IterationPlan, OptimizationFlags

logger = logging.getLogger(__name__)


def precompute_powers(a: int, N: int, t: int) -> tuple[list[int], list[int]]:
    """Tablas a^{2^k} mod N y sus inversos para k = 0..t-1 (cuadrados sucesivos)."""
    if t < 1:
        raise InvalidArgumentError(f"t debe ser >= 1, se recibió {t}")
    if N < 2 or gcd(a % N, N) != 1:
        raise InvalidArgumentError(f"a = {a} no es coprimo con N = {N}")
    powers = [a % N]
    for _ in range(t - 1):
        powers.append((powers[-1] * powers[-1]) % N)
    return powers, [mod_inverse(power, N) for power in powers]


def _iteration(
    index: int,
    mode: IterationMode,
    multiplier: int,
    repetitions: int,
    addend: int,
    visited: Optional[set[int]],
    reachable_size: int,
    N: int,
    n: int,
    flags: OptimizationFlags,
) -> IterationPlan:
    inverse_multiplier = mod_inverse(multiplier, N)
    all_true = [True] * n
    keep_fwd = keep_inv = overflow_fwd = overflow_inv = all_true
    mask = inverse_mask = 2**n - 1
    if mode == IterationMode.FULL and visited is not None:
        products = {(multiplier * x) % N for x in visited}
        mask = or_mask(visited, n)
        inverse_mask = or_mask(products, n)
        if flags.elide_adders_by_or_mask:
            keep_fwd = keep_flags(mask, n)
            keep_inv = keep_flags(inverse_mask, n)
        if flags.elide_overflow_checks:
            # M†_{g^-1} deshace M_{g^-1} aplicado sobre g·x: mismas sumas parciales
            overflow_fwd = overflow_flags(visited, multiplier, N, n)
            overflow_inv = overflow_flags(products, inverse_multiplier, N, n)
    return IterationPlan(
        index=index,
        mode=mode,
        multiplier=multiplier,
        inverse_multiplier=inverse_multiplier,
        repetitions=repetitions,
        addend=addend,
        or_mask=mask,
        inverse_or_mask=inverse_mask,
        keep_forward=list(keep_fwd),
        overflow_forward=list(overflow_fwd),
        keep_inverse=list(keep_inv),
        overflow_inverse=list(overflow_inv),
        reachable_size=reachable_size,
    )


def build_plan(a: int, N: int, n: int, t: int, flags: OptimizationFlags, cap: Optional[int] = None) -> ElisionPlan:
    """
    Calcula el plan de ejecución para (a, N) sin tocar el programa compilado.

    La iteración k aplica la potencia a^{2^{t-1-k}}. Se sigue el conjunto
    exacto de residuos del objetivo; si supera el tope todas las decisiones
    posteriores vuelven al circuito completo.
    """
    if N >= 2**n:
        raise InvalidArgumentError(f"N = {N} no cabe en {n} bits")
    cap = settings.REACHABLE_SET_CAP if cap is None else cap
    powers, inverse_powers = precompute_powers(a, N, t)

    reachable: Optional[set[int]] = {1}
    iterations: list[IterationPlan] = []
    for k in range(t):
        power = powers[t - 1 - k]
        if flags.use_precomputed_powers:
            multiplier, repetitions = power, 1
        else:
            multiplier, repetitions = a % N, 2 ** (t - 1 - k)

        if flags.skip_identity_powers and power == 1:
            mode = IterationMode.SKIP
        elif flags.first_iteration_as_addition and reachable == {1}:
            mode = IterationMode.ADD
        else:
            mode = IterationMode.FULL

        visited = None
        if mode == IterationMode.FULL and reachable is not None:
            visited = orbit(reachable, multiplier, N, repetitions, cap)
        iterations.append(_iteration(
            k, mode, multiplier, repetitions,
            addend=power - 1 if mode == IterationMode.ADD else 0,
            visited=visited,
            reachable_size=len(reachable) if reachable is not None else 0,
            N=N, n=n, flags=flags,
        ))

        if reachable is not None:
            reachable = reachable | {(power * x) % N for x in reachable}
            if len(reachable) > cap:
                logger.warning(f"Conjunto alcanzable supera el tope ({cap}) en la iteración {k}; se desactiva la elisión")
                reachable = None

    return ElisionPlan(
        a=a % N,
        N=N,
        n=n,
        t=t,
        flags=flags,
        powers=powers,
        inverse_powers=inverse_powers,
        iterations=iterations,
        capped=reachable is None,
    )
