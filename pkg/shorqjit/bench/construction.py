import gc
import logging
import platform
import time
from typing import Callable, Optional, Sequence

from shorqjit.circuits.qpe import build_qpe_program
from shorqjit.core.config import settings
from shorqjit.core.exceptions import InvalidArgumentError
from shorqjit.ir.program import HybridProgram
from shorqjit.logging import log_event
from shorqjit.schemas.bench import BenchRecord

logger = logging.getLogger(__name__)


def host_metadata() -> tuple[str, str]:
    host = f"{platform.node()} {platform.system()} {platform.machine()} python {platform.python_version()}"
    return host.strip(), settings.BUILD_PROFILE


def time_build(n: int, repetitions: int, builder: Callable[[int], HybridProgram] = build_qpe_program) -> tuple[float, int]:
    """Media de construcciones en frío (sin caché) y número de nodos."""
    program = builder(n)  # calentamiento: imports y cachés del intérprete
    timings = []
    gc_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repetitions):
            start = time.perf_counter()
            builder(n)
            timings.append(time.perf_counter() - start)
    finally:
        if gc_enabled:
            gc.enable()
    return sum(timings) / len(timings), program.node_count


def bench_construction(
    bit_widths: Sequence[int],
    repetitions: Optional[int] = None,
    builder: Callable[[int], HybridProgram] = build_qpe_program,
) -> list[BenchRecord]:
    """Tiempo medio de construcción del programa para cada ancho de bits."""
    repetitions = settings.BENCH_REPETITIONS if repetitions is None else repetitions
    if repetitions < 1:
        raise InvalidArgumentError(f"repetitions debe ser >= 1, se recibió {repetitions}")
    host, profile = host_metadata()
    records = []
    for n in bit_widths:
        mean, nodes = time_build(n, repetitions, builder)
        log_event("bench_compile", n=n, mean_s=round(mean, 6), node_count=nodes)
        records.append(BenchRecord(
            n=n,
            flags="-",
            construction_time_s=max(mean, 1e-9),
            node_count=nodes,
            trials=repetitions,
            host=host,
            profile=profile,
        ))
    return records
