# Módulo de logging de ShorQJIT

from shorqjit.logging.logger import log_event, logger

__all__ = ["log_event", "logger"]
