from typing import Optional


class OmegaError(Exception):
    """Base class for every error raised by omega_ideals."""


class RingMismatchError(OmegaError, ValueError):

    def __init__(self, left, right):
        super().__init__(f"Objects live in different rings: {left} vs {right}")
        self.left = left
        self.right = right


class PreconditionError(OmegaError, ValueError):
    """An operation was called outside of its domain (wrong arity, zero ideal, ...)."""


class NoQualifyingMonomialError(PreconditionError):
    """No monomial g of the remaining components lies below the chosen irreducible component."""


class IncomparablePrimesError(PreconditionError):
    """Associated primes were expected to be pairwise incomparable."""


class GraphTooLargeError(PreconditionError):

    def __init__(self, vertex_count: int, cap: int):
        super().__init__(f"Graph has {vertex_count} vertices, exhaustive cover enumeration is capped at {cap}")
        self.vertex_count = vertex_count
        self.cap = cap


class IdealParseError(OmegaError, ValueError):

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.message = message
        self.text = text
        self.position = position
        if position is None:
            super().__init__(message)
        else:
            super().__init__(f"{message} at position {position}")

    def pointer(self) -> str:
        """Two-line rendering with a caret under the offending character."""
        if self.position is None:
            return self.text
        return f"{self.text}\n{' ' * self.position}^"


class UnknownVariableError(IdealParseError):
    pass


class GraphParseError(OmegaError, ValueError):

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(message if line is None else f"{message} (line {line})")
        self.line = line
