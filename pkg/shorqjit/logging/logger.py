import logging
import time
from typing import Any

from shorqjit.core.config import settings

# Configurar el logger
_handlers: list[logging.Handler] = [logging.StreamHandler()]
if settings.LOG_FILE:
    _handlers.append(logging.FileHandler(settings.LOG_FILE))

logging.basicConfig(
    level=settings.LOG_LEVEL,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=_handlers,
)

logger = logging.getLogger("shorqjit")


def log_event(event: str, started_at: float | None = None, **fields: Any) -> int:
    """
    Registra un evento estructurado del compilador o del simulador.

    Args:
        event: Nombre corto del evento (program_built, attempt, bench_cell...)
        started_at: Marca de ``time.perf_counter()`` al inicio de la operación (opcional)
        **fields: Datos del evento

    Returns:
        Tiempo transcurrido en milisegundos (0 si no se pasó ``started_at``)
    """
    elapsed_ms = 0
    if started_at is not None:
        elapsed_ms = int((time.perf_counter() - started_at) * 1000)
        fields["elapsed_ms"] = elapsed_ms

    logger.info(f"{event}: {fields}")
    return elapsed_ms
