import logging
import threading
import time
from dataclasses import dataclass
from typing import Callable

from shorqjit.circuits.qpe import build_qpe_program
from shorqjit.ir.program import HybridProgram
from shorqjit.logging import log_event

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CacheEntry:
    program: HybridProgram
    construction_time_s: float


class ProgramCache:
    """
    Programas compilados por ancho de bits.

    Las lecturas no toman el candado; la inserción es exclusiva y vuelve a
    comprobar la entrada, así que cada n se construye como mucho una vez.
    """

    def __init__(self, builder: Callable[[int], HybridProgram] = build_qpe_program):
        self._builder = builder
        self._entries: dict[int, CacheEntry] = {}
        self._lock = threading.RLock()
        self.builds = 0
        self.hits = 0

    def get(self, n: int) -> tuple[HybridProgram, float]:
        """Devuelve (programa, segundos de construcción en esta llamada; 0.0 si hubo acierto)."""
        entry = self._entries.get(n)
        if entry is None:
            with self._lock:
                entry = self._entries.get(n)
                if entry is None:
                    started_at = time.perf_counter()
                    program = self._builder(n)
                    entry = CacheEntry(program, time.perf_counter() - started_at)
                    self._entries[n] = entry
                    self.builds += 1
                    log_event("cache_build", n=n, construction_time_s=round(entry.construction_time_s, 6))
                    return entry.program, entry.construction_time_s
        with self._lock:
            self.hits += 1
        logger.debug(f"cache_hit: n={n}")
        return entry.program, 0.0

    def entry(self, n: int) -> CacheEntry:
        """Entrada de n, construyéndola si hace falta."""
        self.get(n)
        return self._entries[n]

    def __contains__(self, n: int) -> bool:
        return n in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self.builds = 0
            self.hits = 0


# Caché compartida por el proceso
default_cache = ProgramCache()
