"""Excepciones propias de ShorQJIT."""


class ShorQJITError(Exception):
    """Excepción base del proyecto"""
    pass


class InvalidArgumentError(ShorQJITError, ValueError):
    """Argumento fuera del dominio de la operación"""
    pass


class NoInverseError(InvalidArgumentError):
    """No existe inverso modular (gcd distinto de 1)"""
    pass


class PreconditionError(InvalidArgumentError):
    """El llamador violó una precondición (p. ej. N par o potencia de un primo)"""
    pass


class MissingParameterError(ShorQJITError, KeyError):
    """Un slot de parámetro del programa no fue enlazado"""

    def __str__(self) -> str:
        return Exception.__str__(self)


class MalformedProgramError(ShorQJITError):
    """El programa produjo un evento inválido (índice de qubit, aridad, etc.)"""
    pass


class CapacityError(ShorQJITError):
    """Se superó una capacidad configurada (qubits, ramas)"""
    pass


class InternalConsistencyError(ShorQJITError):
    """Deriva numérica o estado interno incoherente"""
    pass
