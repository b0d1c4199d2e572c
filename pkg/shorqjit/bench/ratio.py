"""
Reducción de compuertas con las optimizaciones activas frente al circuito de
referencia (potencias precalculadas y nada más), para 10 bases aleatorias
por ancho de bits y para a = 2.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import pandas as pd
from sympy import nextprime

from shorqjit.arithmetic import gcd
from shorqjit.bench.construction import host_metadata
from shorqjit.bench.counting import count_program
from shorqjit.core.config import settings
from shorqjit.core.exceptions import InvalidArgumentError
from shorqjit.driver.cache import ProgramCache, default_cache
from shorqjit.logging import log_event
from shorqjit.optimizer.params import InstanceParams
from shorqjit.schemas.bench import BenchRecord
from shorqjit.schemas.optimization import OptimizationFlags
from shorqjit.simulator.rng import make_generator

logger = logging.getLogger(__name__)

SERIES_RANDOM = "random"
SERIES_A2 = "a2"


@dataclass(frozen=True)
class RatioCell:
    n: int
    N: int
    a: int
    series: str


def _prime_in(low: int, high: int, rng: np.random.Generator) -> Optional[int]:
    """Primo impar en [low, high] a partir de un punto sorteado, o None."""
    if high < max(low, 3):
        return None
    start = int(rng.integers(max(low, 3) - 1, high))
    prime = int(nextprime(start))
    return prime if prime <= high else None


def semiprime_for_bit_width(n: int, rng: np.random.Generator, max_tries: int = 1000) -> int:
    """N = p·q con p != q primos impares y exactamente n bits."""
    if n < 4:
        raise InvalidArgumentError(f"No hay semiprimos impares de {n} bits")
    half = n // 2
    for _ in range(max_tries):
        p = _prime_in(2 ** (half - 1), 2**half - 1, rng)
        if p is None:
            continue
        low = -(-(2 ** (n - 1)) // p)
        high = (2**n - 1) // p
        q = _prime_in(low, high, rng)
        if q is not None and q != p and (p * q).bit_length() == n:
            return p * q
    raise InvalidArgumentError(f"No se encontró un semiprimo de {n} bits")


def random_bases(N: int, samples: int, rng: np.random.Generator) -> list[int]:
    bases = []
    while len(bases) < samples:
        a = int(rng.integers(2, N - 1))
        if gcd(a, N) == 1:
            bases.append(a)
    return bases


def plan_cells(bit_widths: Sequence[int], samples: int, seed: int) -> list[RatioCell]:
    rng = make_generator(seed)
    cells = []
    for n in bit_widths:
        N = semiprime_for_bit_width(n, rng)
        cells.extend(RatioCell(n, N, a, SERIES_RANDOM) for a in random_bases(N, samples, rng))
        cells.append(RatioCell(n, N, 2, SERIES_A2))
    return cells


def _evaluate(cell: RatioCell, seed: int, cache: ProgramCache) -> BenchRecord:
    program, _ = cache.get(cell.n)
    construction = cache.entry(cell.n).construction_time_s
    optimized = count_program(program, InstanceParams.bind(cell.N, cell.a, flags=OptimizationFlags.all()))
    baseline = count_program(program, InstanceParams.bind(cell.N, cell.a, flags=OptimizationFlags.baseline()))
    reduction = 1.0 - optimized.total / baseline.total
    log_event("bench_cell", n=cell.n, N=cell.N, a=cell.a, series=cell.series, reduction=round(reduction, 4))
    host, profile = host_metadata()
    record = BenchRecord(
        n=cell.n,
        N=cell.N,
        a=cell.a,
        flags=OptimizationFlags.all().label(),
        construction_time_s=max(construction, 1e-9),
        node_count=program.node_count,
        reduction_ratio=reduction,
        seed=seed,
        host=host,
        profile=profile,
        series=cell.series,
    )
    return record.with_counts(optimized)


def bench_ratio(
    bit_widths: Sequence[int],
    samples: int = 10,
    seed: int = 0,
    workers: Optional[int] = None,
    cache: Optional[ProgramCache] = None,
) -> list[BenchRecord]:
    """Una fila por (n, a); las celdas son independientes y se reparten entre hilos."""
    cache = cache if cache is not None else default_cache
    workers = settings.BENCH_WORKERS if workers is None else workers
    cells = plan_cells(bit_widths, samples, seed)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda cell: _evaluate(cell, seed, cache), cells))


def summarize_ratio(records: Sequence[BenchRecord]) -> pd.DataFrame:
    """Reducción media por ancho de bits y serie."""
    frame = pd.DataFrame([record.model_dump() for record in records])
    return (
        frame.groupby(["n", "series"])["reduction_ratio"]
        .mean()
        .unstack("series")
        .reset_index()
    )
