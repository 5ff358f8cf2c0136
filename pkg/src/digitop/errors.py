"""Exception hierarchy for digitop."""


class DigitopError(Exception):
    """Base class for all library errors."""


class ZeroVertices(DigitopError, ValueError):
    pass


class EdgeOutOfRange(DigitopError, ValueError):
    pass


class VertexOutOfRange(DigitopError, ValueError):
    pass


class CapExceeded(DigitopError):
    pass


class BadLevel(DigitopError, ValueError):
    pass


class DomainMismatch(DigitopError, ValueError):
    pass


class NotPointed(DigitopError, ValueError):
    pass


class NotConnected(DigitopError):
    pass


class NotIrreducible(DigitopError):
    pass


class NotCategory2(DigitopError):
    pass


class DiscontinuousMultiplication(DigitopError):
    """Raised with ``witness``: a pair of adjacent product points whose products are not adjacent."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MultiplicationNotInvertible(DigitopError):
    pass


class MuENotInvertible(DigitopError):
    pass


class NotHomotopyEquivalence(DigitopError):
    pass


class ReductionFailed(DigitopError):
    """No retraction onto a smaller image keeps the basepoint."""


class StructureViolation(DigitopError):
    pass


class UnknownFixture(DigitopError, KeyError):
    pass


class NotAssociative(DigitopError, ValueError):
    pass


class NoIdentity(DigitopError, ValueError):
    pass


class NoInverse(DigitopError, ValueError):
    pass


class BadSubset(DigitopError, ValueError):
    pass


class SizeMismatch(DigitopError, ValueError):
    pass


class ParseError(DigitopError, ValueError):
    def __init__(self, message, path=None, line=None):
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(where + message)
        self.path = path
        self.line = line


class NotContinuous(DigitopError, ValueError):
    pass
