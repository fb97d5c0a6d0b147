"""Exception hierarchy shared by all starfree modules.

Every domain error raised by the library derives from StarfreeError so the
command-line layer can map them to exit status 1 with a distinct message.
"""


class StarfreeError(Exception):
    """Base class for all starfree domain errors."""


class OrderTooLarge(StarfreeError):
    """Graph order exceeds a hard ceiling (64 vertices, or an enumeration ceiling)."""


class BadEdge(StarfreeError):
    """Edge endpoint out of range, or a loop."""


class ParseError(StarfreeError):
    """Malformed textual input (graph6, star-forest text, record files).

    Carries ``offset`` (byte offset within a line) or ``line`` (1-based line
    number within a file) when known.
    """

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.offset = offset
        self.line = line


class EmptyGraph(StarfreeError):
    """Spectral quantity requested for the order-0 graph."""


class Disconnected(StarfreeError):
    """Operation requires a connected graph."""


class ParamOutOfRange(StarfreeError):
    """Numeric parameter violates an evaluator's hypothesis."""


class NoRegularGraph(StarfreeError):
    """No regular graph with the requested degree exists at this order (parity/order)."""


class DivisionByZeroK2(StarfreeError):
    """Order-threshold formula has denominator k-2 or 4k-8 and k=2 was given."""


class NegativeDiscriminant(StarfreeError):
    """Closed-form bound has a negative discriminant at these parameters."""


class EmptyClass(StarfreeError):
    """An exhaustive search found no graph satisfying the freeness filter."""
