# Paquete ShorQJIT: compilador híbrido y simulador del algoritmo de Shor

__version__ = "0.1.0"
